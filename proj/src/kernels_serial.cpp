#include <cassert>

#include "fracnabla/kernels.hpp"

namespace fracnabla::kernels::serial {

void history_convolution(std::span<const double> weights, std::span<const double> u,
                         std::size_t first, std::span<double> out) {
    assert(weights.size() >= u.size());
    assert(out.size() + first == u.size());
    for (std::size_t t = first; t < u.size(); ++t) {
        double acc = 0.0;
        for (std::size_t s = 0; s <= t; ++s) {
            acc += weights[t - s] * u[s];
        }
        out[t - first] = acc;
    }
}

void strip_forward_substitution(const StripView& system, std::span<double> x) {
    const std::size_t n = system.size();
    assert(x.size() == n);
    assert(system.primary.size() >= n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        if (system.two_term()) {
            const double coeff = system.row_coeff[i];
            for (std::size_t j = 0; j < i; ++j) {
                acc += (system.primary[i - j] + coeff * system.secondary[i - j]) * x[j];
            }
        } else {
            for (std::size_t j = 0; j < i; ++j) {
                acc += system.primary[i - j] * x[j];
            }
        }
        x[i] = (system.rhs[i] - acc) / system.diag[i];
    }
}

}  // namespace fracnabla::kernels::serial
