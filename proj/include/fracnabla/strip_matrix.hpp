#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracnabla/grid.hpp"
#include "fracnabla/kernels.hpp"
#include "fracnabla/specfun.hpp"

namespace fracnabla {

/// How the two-term assemblers build the u(0)/u(1) contributions to the
/// right-hand side.
enum class InitialVectorForm {
    /// Expanded from the Riemann-Liouville sum at every t: both the β and the
    /// a(t)-scaled α weights multiply u(0) and u(1).
    derived,
    /// The published column vectors P_t = h_{-α-1}(t+1, 0) and
    /// Q_t = a(t) h_{-α-1}(t+1, 0). Kept for comparison runs only; the
    /// resulting grid does not satisfy the difference equation.
    published,
};

/// Lower triangular strip system L x = rhs over the unknowns
/// u(first_unknown), ..., u(first_unknown + size() - 1).
///
/// Row i, column j < i holds primary(i-j+1) + row_coeff[i] · secondary(i-j+1);
/// the diagonal holds 1 + diag_shift[i]. Nothing above the diagonal is stored.
struct StripSystem {
    std::size_t first_unknown = 1;
    WeightSequence primary;
    std::optional<WeightSequence> secondary;
    std::vector<double> row_coeff;
    std::vector<double> diag_shift;
    std::vector<double> rhs;

    std::size_t size() const noexcept { return rhs.size(); }
    double diagonal(std::size_t i) const { return 1.0 + diag_shift.at(i); }

    /// Zero-based matrix entry L(i, j), rebuilt from the weights.
    double entry(std::size_t i, std::size_t j) const;

    /// Row-major dense copy of L. Intended for small diagnostic systems.
    std::vector<double> dense() const;
};

StripSystem assemble_single_rl(const GridFunction& a, const GridFunction& f, double c,
                               double alpha, std::size_t m);

StripSystem assemble_single_caputo(const GridFunction& a, const GridFunction& f, double c,
                                   double alpha, std::size_t m);

StripSystem assemble_two_term_rl(const GridFunction& a, const GridFunction& b,
                                 const GridFunction& f, double c, double d, double alpha,
                                 double beta, std::size_t n,
                                 InitialVectorForm form = InitialVectorForm::derived);

/// Reduces the Caputo equation to Riemann-Liouville form with forcing
///
///   g(t) = f(t) + Σ_{k<⌈β⌉} h_{k-β}(t-k+1, 0) (∇^k u)(k)
///               + a(t) Σ_{k<⌈α⌉} h_{k-α}(t-k+1, 0) (∇^k u)(k)
///
/// where (∇^0 u)(0) = c and (∇^1 u)(1) = d - c, then assembles that system.
StripSystem assemble_two_term_caputo(const GridFunction& a, const GridFunction& b,
                                     const GridFunction& f, double c, double d,
                                     double alpha, double beta, std::size_t n,
                                     InitialVectorForm form = InitialVectorForm::derived);

/// The forcing g of the reduced Riemann-Liouville equation, on 0..n
/// (entries below t = 2 are copied from f).
GridFunction two_term_caputo_forcing(const GridFunction& a, const GridFunction& f,
                                     double c, double d, double alpha, double beta,
                                     std::size_t n);

/// Forward substitution without forming L. Throws SingularSystemError if a
/// diagonal entry vanishes.
std::vector<double> forward_solve(const StripSystem& system,
                                  Execution exec = Execution::serial);

}  // namespace fracnabla
