#include "fracnabla/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracnabla/errors.hpp"
#include "fracnabla/expression.hpp"

namespace fracnabla {

namespace {

constexpr std::array<std::string_view, 9> kKeys{
    "kind", "alpha", "beta", "a", "b", "f", "u0", "u1", "horizon"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::string* find(const ProblemConfig& cfg, const std::string& key) {
    const auto it = cfg.entries.find(key);
    return it == cfg.entries.end() ? nullptr : &it->second;
}

const std::string& require(const ProblemConfig& cfg, const std::string& key) {
    const std::string* value = find(cfg, key);
    if (value == nullptr) {
        throw ValidationError("missing key '" + key + "'");
    }
    return *value;
}

double parse_real(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* last = text.data() + text.size();
    const char* first = text.data();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ValidationError("key '" + key + "': expected a real number, got '" + text + "'");
    }
    return value;
}

std::size_t parse_horizon(const std::string& text) {
    std::size_t value = 0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc() || ptr != last) {
        throw ValidationError("key 'horizon': expected a non-negative integer, got '" + text +
                              "'");
    }
    return value;
}

ProblemKind parse_kind(const std::string& text) {
    if (text == "rl") return ProblemKind::single_rl;
    if (text == "caputo") return ProblemKind::single_caputo;
    if (text == "two_rl") return ProblemKind::two_rl;
    if (text == "two_caputo") return ProblemKind::two_caputo;
    throw ValidationError("key 'kind': expected rl|caputo|two_rl|two_caputo, got '" + text +
                          "'");
}

GridFunction tabulate(const std::string& key, const std::string& text, std::size_t horizon) {
    Expression expr = [&] {
        try {
            return parse_expression(text);
        } catch (const SyntaxError& e) {
            throw ValidationError("key '" + key + "': syntax error at " + e.what());
        }
    }();
    std::vector<double> values(horizon + 1);
    for (std::size_t t = 0; t <= horizon; ++t) {
        try {
            values[t] = expr.evaluate(static_cast<double>(t));
        } catch (const DomainError& e) {
            throw ValidationError("key '" + key + "': evaluation failed at t = " +
                                  std::to_string(t) + ": " + e.what());
        }
    }
    return GridFunction(std::move(values));
}

}  // namespace

ProblemConfig parse_config(std::string_view text) {
    ProblemConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            throw ValidationError("line " + std::to_string(line_no) + ": unknown key '" + key +
                                  "'");
        }
        if (value.empty()) {
            throw ValidationError("line " + std::to_string(line_no) + ": empty value for '" +
                                  key + "'");
        }
        if (!cfg.entries.emplace(key, value).second) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate key '" +
                                  key + "'");
        }
    }
    return cfg;
}

ProblemSpec load_problem(std::string_view config_text, std::string name) {
    const ProblemConfig cfg = parse_config(config_text);

    ProblemSpec p;
    p.name = std::move(name);
    p.kind = parse_kind(require(cfg, "kind"));
    p.alpha = parse_real("alpha", require(cfg, "alpha"));
    p.horizon = parse_horizon(require(cfg, "horizon"));
    p.initial_c = parse_real("u0", require(cfg, "u0"));
    p.coeff_a = tabulate("a", require(cfg, "a"), p.horizon);
    p.forcing = tabulate("f", require(cfg, "f"), p.horizon);

    if (is_two_term(p.kind)) {
        p.beta = parse_real("beta", require(cfg, "beta"));
        p.initial_d = parse_real("u1", require(cfg, "u1"));
        p.coeff_b = tabulate("b", require(cfg, "b"), p.horizon);
    } else {
        for (const char* key : {"beta", "b", "u1"}) {
            if (find(cfg, key) != nullptr) {
                throw ValidationError(std::string("key '") + key +
                                      "' only applies to two-term kinds");
            }
        }
    }
    validate(p);
    return p;
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_problem(buffer.str(), std::filesystem::path(path).stem().string());
}

}  // namespace fracnabla
