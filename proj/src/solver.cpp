#include "fracnabla/solver.hpp"

#include <cmath>
#include <string>

#include "fracnabla/errors.hpp"

namespace fracnabla {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::single_rl: return "rl";
        case ProblemKind::single_caputo: return "caputo";
        case ProblemKind::two_rl: return "two_rl";
        case ProblemKind::two_caputo: return "two_caputo";
    }
    return "unknown";
}

bool is_two_term(ProblemKind kind) {
    return kind == ProblemKind::two_rl || kind == ProblemKind::two_caputo;
}

bool is_caputo(ProblemKind kind) {
    return kind == ProblemKind::single_caputo || kind == ProblemKind::two_caputo;
}

namespace {

void require_covers(const GridFunction& g, std::size_t horizon, const char* name) {
    if (g.empty() || g.first() != 0 || g.horizon() < horizon) {
        throw ValidationError(std::string(name) + " must be tabulated on 0.." +
                              std::to_string(horizon));
    }
}

}  // namespace

void validate(const ProblemSpec& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.initial_c)) {
        throw ValidationError("alpha and u(0) must be finite");
    }
    require_covers(p.coeff_a, p.horizon, "a");
    require_covers(p.forcing, p.horizon, "f");

    if (!is_two_term(p.kind)) {
        if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
            throw ValidationError("alpha must lie in (0, 1] for single-term problems");
        }
        if (p.horizon < 1) {
            throw ValidationError("horizon must be at least 1");
        }
        if (p.beta || p.coeff_b || p.initial_d) {
            throw ValidationError("beta, b and u(1) only apply to two-term problems");
        }
        for (std::size_t t = 1; t <= p.horizon; ++t) {
            if (p.coeff_a(t) == -1.0) {
                throw ValidationError("singular coefficient: a(" + std::to_string(t) +
                                      ") = -1");
            }
        }
        return;
    }

    if (!p.beta || !p.coeff_b || !p.initial_d) {
        throw ValidationError("two-term problems need beta, b and u(1)");
    }
    if (!(p.alpha > 0.0 && p.alpha < *p.beta && *p.beta < 2.0)) {
        throw ValidationError("orders must satisfy 0 < alpha < beta < 2");
    }
    if (!std::isfinite(*p.initial_d)) {
        throw ValidationError("u(1) must be finite");
    }
    if (p.horizon < 2) {
        throw ValidationError("horizon must be at least 2 for two-term problems");
    }
    require_covers(*p.coeff_b, p.horizon, "b");
    for (std::size_t t = 2; t <= p.horizon; ++t) {
        if (p.coeff_a(t) + (*p.coeff_b)(t) == -1.0) {
            throw ValidationError("singular coefficients: a(" + std::to_string(t) + ") + b(" +
                                  std::to_string(t) + ") = -1");
        }
    }
}

StripSystem assemble(const ProblemSpec& p, SolveOptions options) {
    validate(p);
    switch (p.kind) {
        case ProblemKind::single_rl:
            return assemble_single_rl(p.coeff_a, p.forcing, p.initial_c, p.alpha, p.horizon);
        case ProblemKind::single_caputo:
            return assemble_single_caputo(p.coeff_a, p.forcing, p.initial_c, p.alpha,
                                          p.horizon);
        case ProblemKind::two_rl:
            return assemble_two_term_rl(p.coeff_a, *p.coeff_b, p.forcing, p.initial_c,
                                        *p.initial_d, p.alpha, *p.beta, p.horizon,
                                        options.initial_vectors);
        case ProblemKind::two_caputo:
            return assemble_two_term_caputo(p.coeff_a, *p.coeff_b, p.forcing, p.initial_c,
                                            *p.initial_d, p.alpha, *p.beta, p.horizon,
                                            options.initial_vectors);
    }
    throw ValidationError("unknown problem kind");
}

Solution solve(const ProblemSpec& problem, SolveOptions options) {
    const auto start = std::chrono::steady_clock::now();
    const StripSystem system = assemble(problem, options);
    const std::vector<double> unknowns = forward_solve(system, options.execution);

    std::vector<double> values;
    values.reserve(problem.horizon + 1);
    values.push_back(problem.initial_c);
    if (is_two_term(problem.kind)) {
        values.push_back(*problem.initial_d);
    }
    values.insert(values.end(), unknowns.begin(), unknowns.end());

    Solution solution;
    solution.values = GridFunction(std::move(values));
    solution.problem = problem;
    solution.solve_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return solution;
}

namespace {

ProblemSpec eigen_problem(ProblemKind kind, double alpha, double lambda, std::size_t m) {
    if (!(lambda > -1.0 && lambda < 1.0)) {
        throw ValidationError("eigenvalue problems require -1 < lambda < 1");
    }
    ProblemSpec p;
    p.kind = kind;
    p.alpha = alpha;
    p.coeff_a = GridFunction::constant(lambda, m);
    p.forcing = GridFunction::constant(0.0, m);
    p.initial_c = 1.0;
    p.horizon = m;
    return p;
}

}  // namespace

ProblemSpec eigen_rl_problem(double alpha, double lambda, std::size_t m) {
    auto p = eigen_problem(ProblemKind::single_rl, alpha, lambda, m);
    p.name = "eigen_rl";
    return p;
}

ProblemSpec eigen_caputo_problem(double alpha, double lambda, std::size_t m) {
    auto p = eigen_problem(ProblemKind::single_caputo, alpha, lambda, m);
    p.name = "eigen_caputo";
    return p;
}

Solution eigen_rl(double alpha, double lambda, std::size_t m) {
    return solve(eigen_rl_problem(alpha, lambda, m));
}

Solution eigen_caputo(double alpha, double lambda, std::size_t m) {
    return solve(eigen_caputo_problem(alpha, lambda, m));
}

ProblemSpec relaxation_problem(double alpha, double A, const GridFunction& forcing,
                               double c, std::size_t m) {
    ProblemSpec p;
    p.kind = ProblemKind::single_caputo;
    p.alpha = alpha;
    p.coeff_a = GridFunction::constant(A, m);
    p.forcing = forcing;
    p.initial_c = c;
    p.horizon = m;
    p.name = "relaxation";
    return p;
}

Solution relaxation(double alpha, double A, const GridFunction& forcing, double c,
                    std::size_t m) {
    return solve(relaxation_problem(alpha, A, forcing, c, m));
}

ProblemSpec oscillation_problem(double beta, double B, const GridFunction& forcing,
                                double c, double d, std::size_t n) {
    ProblemSpec p;
    p.kind = ProblemKind::two_caputo;
    // a ≡ 0 removes the α-term; any order below β will do.
    p.alpha = beta / 2.0;
    p.beta = beta;
    p.coeff_a = GridFunction::constant(0.0, n);
    p.coeff_b = GridFunction::constant(B, n);
    p.forcing = forcing;
    p.initial_c = c;
    p.initial_d = d;
    p.horizon = n;
    p.name = "oscillation";
    return p;
}

Solution oscillation(double beta, double B, const GridFunction& forcing, double c, double d,
                     std::size_t n) {
    return solve(oscillation_problem(beta, B, forcing, c, d, n));
}

}  // namespace fracnabla
