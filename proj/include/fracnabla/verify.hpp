#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fracnabla/solver.hpp"

namespace fracnabla {

struct ResidualReport {
    /// (t, |LHS(t) - f(t)|) for every t in the equation's domain.
    std::vector<std::pair<std::size_t, double>> per_point;
    double max_abs = 0.0;
    /// max over t of |LHS(t) - f(t)| / max(1, |f(t)|, max_{s<=t} |u(s)|).
    /// Diagnostic only; fast-growing solutions cannot reach small absolute
    /// residuals in double precision.
    double max_relative = 0.0;
    std::size_t domain_start = 1;
};

/// Plugs `solution` back into the difference equation using the
/// definition-level operators of nabla_ops. Shares nothing with the strip
/// assembly except the Taylor monomial weights.
ResidualReport residual(const ProblemSpec& problem, const Solution& solution);

/// Marches t upward and isolates u(t) directly from the defining sums:
/// the head weight of every operator is 1, so
///
///   u(t) = (f(t) + initial-value terms - history) / (1 + a(t) [+ b(t)]).
///
/// Independent of strip_matrix.
Solution direct_step_solve(const ProblemSpec& problem);

}  // namespace fracnabla
