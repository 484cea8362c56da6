#include <algorithm>
#include <cassert>
#include <vector>

#include <omp.h>

#include "fracnabla/kernels.hpp"

namespace fracnabla::kernels {

int max_threads() { return omp_get_max_threads(); }

namespace omp {

void history_convolution(std::span<const double> weights, std::span<const double> u,
                         std::size_t first, std::span<double> out) {
    assert(weights.size() >= u.size());
    assert(out.size() + first == u.size());
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    const auto start = static_cast<std::ptrdiff_t>(first);
    // Row cost grows linearly with t.
#pragma omp parallel for schedule(dynamic, 32)
    for (std::ptrdiff_t t = start; t < n; ++t) {
        double acc = 0.0;
        for (std::ptrdiff_t s = 0; s <= t; ++s) {
            acc += weights[t - s] * u[s];
        }
        out[t - start] = acc;
    }
}

namespace {

inline void accumulate_rows(const StripView& sys, std::span<const double> x,
                            std::span<double> acc, std::size_t row_begin,
                            std::size_t row_end, std::size_t col_begin,
                            std::size_t col_end) {
    const auto rb = static_cast<std::ptrdiff_t>(row_begin);
    const auto re = static_cast<std::ptrdiff_t>(row_end);
#pragma omp parallel for schedule(static) if (re - rb > 256)
    for (std::ptrdiff_t ii = rb; ii < re; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double a = acc[i];
        if (sys.two_term()) {
            const double coeff = sys.row_coeff[i];
            for (std::size_t j = col_begin; j < col_end; ++j) {
                a += (sys.primary[i - j] + coeff * sys.secondary[i - j]) * x[j];
            }
        } else {
            for (std::size_t j = col_begin; j < col_end; ++j) {
                a += sys.primary[i - j] * x[j];
            }
        }
        acc[i] = a;
    }
}

}  // namespace

void strip_forward_substitution(const StripView& system, std::span<double> x,
                                std::size_t block) {
    const std::size_t n = system.size();
    assert(x.size() == n);
    assert(system.primary.size() >= n);
    block = std::max<std::size_t>(block, 1);

    std::vector<double> acc(n, 0.0);
    for (std::size_t b0 = 0; b0 < n; b0 += block) {
        const std::size_t b1 = std::min(n, b0 + block);
        for (std::size_t i = b0; i < b1; ++i) {
            double a = acc[i];
            if (system.two_term()) {
                const double coeff = system.row_coeff[i];
                for (std::size_t j = b0; j < i; ++j) {
                    a += (system.primary[i - j] + coeff * system.secondary[i - j]) * x[j];
                }
            } else {
                for (std::size_t j = b0; j < i; ++j) {
                    a += system.primary[i - j] * x[j];
                }
            }
            x[i] = (system.rhs[i] - a) / system.diag[i];
        }
        accumulate_rows(system, x, acc, b1, n, b0, b1);
    }
}

}  // namespace omp
}  // namespace fracnabla::kernels
