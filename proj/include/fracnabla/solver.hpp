#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fracnabla/grid.hpp"
#include "fracnabla/kernels.hpp"
#include "fracnabla/strip_matrix.hpp"

namespace fracnabla {

enum class ProblemKind { single_rl, single_caputo, two_rl, two_caputo };

std::string_view to_string(ProblemKind kind);
bool is_two_term(ProblemKind kind);
bool is_caputo(ProblemKind kind);

/// One initial value problem on {0, ..., horizon}.
///
/// Single-term kinds:  ∇^α u(t) + a(t) u(t) = f(t),  t = 1..m,  u(0) = c.
/// Two-term kinds:     ∇^β u(t) + a(t) ∇^α u(t) + b(t) u(t) = f(t),
///                     t = 2..n,  u(0) = c,  u(1) = d.
/// The Caputo kinds replace every operator by its Caputo counterpart.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::single_rl;
    double alpha = 0.5;
    std::optional<double> beta;
    GridFunction coeff_a;
    std::optional<GridFunction> coeff_b;
    GridFunction forcing;
    double initial_c = 0.0;
    std::optional<double> initial_d;
    std::size_t horizon = 1;
    std::string name;

    /// First grid point at which the equation is imposed (1 or 2).
    std::size_t domain_start() const { return is_two_term(kind) ? 2 : 1; }
};

/// Throws ValidationError unless the problem is well formed: orders in range
/// (0 < α ≤ 1 for single-term kinds, 0 < α < β < 2 otherwise), coefficient
/// grids covering 0..horizon, initial values matching the kind, and a
/// nonvanishing diagonal 1 + a(t) (resp. 1 + a(t) + b(t)).
void validate(const ProblemSpec& problem);

struct SolveOptions {
    InitialVectorForm initial_vectors = InitialVectorForm::derived;
    Execution execution = Execution::serial;
};

struct Solution {
    GridFunction values;
    std::optional<double> residual_max;
    ProblemSpec problem;
    std::chrono::nanoseconds solve_time{0};
};

/// Assembles the strip system for the problem's kind and solves it.
StripSystem assemble(const ProblemSpec& problem, SolveOptions options = {});

Solution solve(const ProblemSpec& problem, SolveOptions options = {});

// Presets.

/// ∇^α u + λ u = 0, u(0) = 1, |λ| < 1.
ProblemSpec eigen_rl_problem(double alpha, double lambda, std::size_t m);
ProblemSpec eigen_caputo_problem(double alpha, double lambda, std::size_t m);
Solution eigen_rl(double alpha, double lambda, std::size_t m);
Solution eigen_caputo(double alpha, double lambda, std::size_t m);

/// Caputo relaxation ∇^α_* u + A u = f, u(0) = c.
ProblemSpec relaxation_problem(double alpha, double A, const GridFunction& forcing,
                               double c, std::size_t m);
Solution relaxation(double alpha, double A, const GridFunction& forcing, double c,
                    std::size_t m);

/// Caputo oscillation ∇^β_* u + B u = f, u(0) = c, u(1) = d, solved on
/// t = 2..n through the two-term assembler with a ≡ 0.
ProblemSpec oscillation_problem(double beta, double B, const GridFunction& forcing,
                                double c, double d, std::size_t n);
Solution oscillation(double beta, double B, const GridFunction& forcing, double c,
                     double d, std::size_t n);

}  // namespace fracnabla
