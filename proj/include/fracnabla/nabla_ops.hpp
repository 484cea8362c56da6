#pragma once

#include "fracnabla/grid.hpp"
#include "fracnabla/kernels.hpp"

// Definition-level fractional nabla operators with base point 0. These
// evaluate the defining weighted sums directly and serve as the reference
// against which the strip-matrix solver is checked.
namespace fracnabla {

/// Fractional nabla sum of order alpha > 0, defined on the whole grid.
GridFunction nabla_sum(const GridFunction& u, double alpha,
                       Execution exec = Execution::serial);

/// Riemann-Liouville nabla difference of non-integer order alpha ∈ (0, 2).
/// The result starts at t = ceil(alpha); u must reach at least that far.
GridFunction rl_difference(const GridFunction& u, double alpha,
                           Execution exec = Execution::serial);

/// Caputo nabla difference of non-integer order alpha ∈ (0, 2): the
/// Riemann-Liouville difference minus the initial-value terms
/// h_{k-α}(t-k+1, 0) · (∇^k u)(k), k < ceil(alpha).
GridFunction caputo_difference(const GridFunction& u, double alpha,
                               Execution exec = Execution::serial);

/// Backward difference of integer order k ∈ {0, 1}. For k = 1 the result
/// starts at t = 1.
GridFunction integer_nabla(const GridFunction& u, int k);

/// The initial-value correction subtracted by caputo_difference, for
/// t = ceil(alpha), ..., u.horizon().
GridFunction caputo_correction(const GridFunction& u, double alpha);

}  // namespace fracnabla
