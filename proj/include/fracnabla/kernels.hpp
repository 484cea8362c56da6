#pragma once

#include <cstddef>
#include <span>

namespace fracnabla {

enum class Execution { serial, parallel };

namespace kernels {

/// Lower triangular operator generated row by row from weight sequences:
///
///     L(i, i) = diag[i]
///     L(i, j) = primary[i-j] + row_coeff[i] * secondary[i-j]    (j < i)
///
/// `secondary` and `row_coeff` are empty for single-term operators.
/// Weight spans are zero-based, `primary[k] = h(k+1, 0)`.
struct StripView {
    std::span<const double> primary;
    std::span<const double> secondary;
    std::span<const double> row_coeff;
    std::span<const double> diag;
    std::span<const double> rhs;

    std::size_t size() const noexcept { return diag.size(); }
    bool two_term() const noexcept { return !secondary.empty(); }

    double entry(std::size_t i, std::size_t j) const {
        if (j > i) {
            return 0.0;
        }
        if (i == j) {
            return diag[i];
        }
        const double w = primary[i - j];
        return two_term() ? w + row_coeff[i] * secondary[i - j] : w;
    }
};

// Reference implementations. Every parallel kernel performs the same
// floating point operations in the same order per output element, so the
// results agree bit for bit.
namespace serial {

/// out[t - first] = Σ_{s=0}^{t} weights[t-s] · u[s] for t = first, ..., |u|-1.
void history_convolution(std::span<const double> weights, std::span<const double> u,
                         std::size_t first, std::span<double> out);

/// Solves L x = rhs by row-wise forward substitution.
void strip_forward_substitution(const StripView& system, std::span<double> x);

}  // namespace serial

namespace omp {

void history_convolution(std::span<const double> weights, std::span<const double> u,
                         std::size_t first, std::span<double> out);

/// Blocked forward substitution: a block of rows is solved serially, then
/// its contribution is pushed into all later rows in parallel.
void strip_forward_substitution(const StripView& system, std::span<double> x,
                                std::size_t block = 64);

}  // namespace omp

inline void history_convolution(std::span<const double> weights, std::span<const double> u,
                                std::size_t first, std::span<double> out, Execution exec) {
    if (exec == Execution::parallel) {
        omp::history_convolution(weights, u, first, out);
    } else {
        serial::history_convolution(weights, u, first, out);
    }
}

inline void strip_forward_substitution(const StripView& system, std::span<double> x,
                                       Execution exec) {
    if (exec == Execution::parallel) {
        omp::strip_forward_substitution(system, x);
    } else {
        serial::strip_forward_substitution(system, x);
    }
}

/// Threads OpenMP will use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace fracnabla
