#include "fracnabla/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "fracnabla/errors.hpp"

namespace fracnabla {

namespace {

std::string fixed(double value, int precision) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::fixed, precision);
    return std::string(buf.data(), ptr);
}

std::string label(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::general, 6);
    return std::string(buf.data(), ptr);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string format_real(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string emit_csv(const Solution& solution) {
    std::string out = "t,u\n";
    const GridFunction& u = solution.values;
    for (std::size_t t = u.first(); !u.empty() && t <= u.horizon(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += format_real(u(t));
        out += '\n';
    }
    return out;
}

std::string emit_weights_csv(const WeightSequence& weights) {
    std::string out = "k,h\n";
    for (std::size_t k = 1; k <= weights.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_real(weights.value(k));
        out += '\n';
    }
    return out;
}

std::string emit_svg(const Solution& solution, int width, int height,
                     const std::string& title) {
    const GridFunction& u = solution.values;
    if (u.size() < 2) {
        throw ValidationError("emit_svg: need at least two grid points");
    }
    if (width < 200 || height < 150) {
        throw ValidationError("emit_svg: canvas too small");
    }

    const double left = 70.0, right = 20.0, top = 40.0, bottom = 40.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const auto values = u.values();
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
        // Constant series: pad symmetrically so it sits on the midline.
        const double pad = lo != 0.0 ? 0.5 * std::abs(lo) : 1.0;
        lo -= pad;
        hi += pad;
    }
    const double t0 = static_cast<double>(u.first());
    const double t1 = static_cast<double>(u.horizon());

    auto x_of = [&](double t) { return left + (t - t0) / (t1 - t0) * plot_w; };
    auto y_of = [&](double v) { return top + (hi - v) / (hi - lo) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const std::string name = title.empty() ? solution.problem.name : title;
    if (!name.empty()) {
        svg += "<text x=\"" + fixed(width / 2.0, 1) +
               "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" +
               xml_escape(name) + "</text>\n";
    }

    const std::string x0 = fixed(left, 1), x1 = fixed(left + plot_w, 1);
    const std::string y0 = fixed(top + plot_h, 1), y1 = fixed(top, 1);
    svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
    svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
    svg += "</g>\n";

    svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<text x=\"" + x0 + "\" y=\"" + fixed(top + plot_h + 16, 1) +
           "\" text-anchor=\"middle\">" + label(t0) + "</text>\n";
    svg += "<text x=\"" + x1 + "\" y=\"" + fixed(top + plot_h + 16, 1) +
           "\" text-anchor=\"middle\">" + label(t1) + "</text>\n";
    svg += "<text x=\"" + fixed(left - 6, 1) + "\" y=\"" + y0 +
           "\" text-anchor=\"end\">" + label(lo) + "</text>\n";
    svg += "<text x=\"" + fixed(left - 6, 1) + "\" y=\"" + fixed(top + 4, 1) +
           "\" text-anchor=\"end\">" + label(hi) + "</text>\n";
    svg += "</g>\n";

    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t t = u.first(); t <= u.horizon(); ++t) {
        if (t != u.first()) {
            svg += ' ';
        }
        svg += fixed(x_of(static_cast<double>(t)), 3) + "," + fixed(y_of(u(t)), 3);
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace fracnabla
