#include "fracnabla/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "fracnabla/errors.hpp"
#include "fracnabla/nabla_ops.hpp"
#include "fracnabla/specfun.hpp"

namespace fracnabla {

namespace {

bool is_integer_order(double order) { return std::floor(order) == order; }

// LHS operator of the given order applied to the whole grid.
GridFunction apply_operator(const GridFunction& u, double order, bool caputo) {
    if (is_integer_order(order)) {
        // Order 1: both definitions reduce to the backward difference for t >= 1.
        return integer_nabla(u, static_cast<int>(order));
    }
    return caputo ? caputo_difference(u, order) : rl_difference(u, order);
}

// Operator order pieces of the equation, for the marching solver.
struct Term {
    double order;
    WeightSequence history;                  // h_{-order-1}
    std::vector<WeightSequence> initial;     // h_{k-order}, k < ceil(order)
};

Term make_term(double order, bool caputo, std::size_t horizon) {
    Term term{order, monomial_weight_sequence(-order - 1.0, horizon + 2), {}};
    if (caputo) {
        const auto n = static_cast<std::size_t>(std::ceil(order));
        for (std::size_t k = 0; k < n; ++k) {
            term.initial.push_back(
                monomial_weight_sequence(static_cast<double>(k) - order, horizon + 2));
        }
    }
    return term;
}

// Σ_{s<t} h(t-s+1) u(s) minus the Caputo initial terms, i.e. everything in
// the operator at t except the head term u(t).
double known_part(const Term& term, const std::vector<double>& u, std::size_t t) {
    double history = 0.0;
    for (std::size_t s = 0; s < t; ++s) {
        history += term.history.value(t - s + 1) * u[s];
    }
    for (std::size_t k = 0; k < term.initial.size(); ++k) {
        const double nabla_k = (k == 0) ? u[0] : u[1] - u[0];
        history -= term.initial[k].value(t - k + 1) * nabla_k;
    }
    return history;
}

}  // namespace

ResidualReport residual(const ProblemSpec& problem, const Solution& solution) {
    const GridFunction& u = solution.values;
    if (u.empty() || u.first() != 0 || u.horizon() != problem.horizon) {
        throw DomainError("residual: solution grid does not match the problem horizon");
    }
    const bool caputo = is_caputo(problem.kind);

    ResidualReport report;
    report.domain_start = problem.domain_start();

    if (!is_two_term(problem.kind)) {
        const GridFunction lhs = apply_operator(u, problem.alpha, caputo);
        for (std::size_t t = report.domain_start; t <= problem.horizon; ++t) {
            const double r = lhs(t) + problem.coeff_a(t) * u(t) - problem.forcing(t);
            report.per_point.emplace_back(t, std::abs(r));
        }
    } else {
        const GridFunction outer = apply_operator(u, *problem.beta, caputo);
        const GridFunction inner = apply_operator(u, problem.alpha, caputo);
        for (std::size_t t = report.domain_start; t <= problem.horizon; ++t) {
            const double r = outer(t) + problem.coeff_a(t) * inner(t) +
                             (*problem.coeff_b)(t) * u(t) - problem.forcing(t);
            report.per_point.emplace_back(t, std::abs(r));
        }
    }
    double running_max = 0.0;
    std::size_t next = 0;
    for (const auto& [t, r] : report.per_point) {
        for (; next <= t; ++next) {
            running_max = std::max(running_max, std::abs(u(next)));
        }
        const double scale = std::max({1.0, std::abs(problem.forcing(t)), running_max});
        report.max_abs = std::max(report.max_abs, r);
        report.max_relative = std::max(report.max_relative, r / scale);
    }
    return report;
}

Solution direct_step_solve(const ProblemSpec& problem) {
    validate(problem);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t horizon = problem.horizon;
    const bool caputo = is_caputo(problem.kind);
    const bool two_term = is_two_term(problem.kind);

    std::vector<double> u(horizon + 1, 0.0);
    u[0] = problem.initial_c;
    if (two_term) {
        u[1] = *problem.initial_d;
    }

    if (!two_term) {
        const Term term = make_term(problem.alpha, caputo, horizon);
        for (std::size_t t = 1; t <= horizon; ++t) {
            const double diag = 1.0 + problem.coeff_a(t);
            if (diag == 0.0) {
                throw SingularSystemError(t, "direct_step_solve: 1 + a(t) vanishes at t = " +
                                                 std::to_string(t));
            }
            u[t] = (problem.forcing(t) - known_part(term, u, t)) / diag;
        }
    } else {
        const Term outer = make_term(*problem.beta, caputo, horizon);
        const Term inner = make_term(problem.alpha, caputo, horizon);
        const GridFunction& b = *problem.coeff_b;
        for (std::size_t t = 2; t <= horizon; ++t) {
            const double at = problem.coeff_a(t);
            const double diag = 1.0 + at + b(t);
            if (diag == 0.0) {
                throw SingularSystemError(
                    t, "direct_step_solve: 1 + a(t) + b(t) vanishes at t = " + std::to_string(t));
            }
            const double known = known_part(outer, u, t) + at * known_part(inner, u, t);
            u[t] = (problem.forcing(t) - known) / diag;
        }
    }

    Solution solution;
    solution.values = GridFunction(std::move(u));
    solution.problem = problem;
    solution.solve_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return solution;
}

}  // namespace fracnabla
