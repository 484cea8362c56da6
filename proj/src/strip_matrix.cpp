#include "fracnabla/strip_matrix.hpp"

#include <cmath>
#include <string>

#include "fracnabla/errors.hpp"

namespace fracnabla {

namespace {

void require_grid(const GridFunction& g, std::size_t horizon, const char* name) {
    if (g.empty() || g.first() != 0 || g.horizon() < horizon) {
        throw ValidationError(std::string("strip assembly: ") + name +
                              " must be tabulated on 0.." + std::to_string(horizon));
    }
}

bool singular_diagonal(double shift) {
    return std::abs(1.0 + shift) < 1e-14 * (1.0 + std::abs(shift));
}

void check_diagonal(const StripSystem& sys) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (singular_diagonal(sys.diag_shift[i])) {
            const std::size_t t = sys.first_unknown + i;
            throw SingularSystemError(
                t, "strip system is singular: diagonal vanishes at t = " + std::to_string(t));
        }
    }
}

void check_single_order(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ValidationError("single-term order must lie in (0, 1]");
    }
}

void check_two_term_orders(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < beta && beta < 2.0)) {
        throw ValidationError("two-term orders must satisfy 0 < alpha < beta < 2");
    }
}

std::size_t order_ceiling(double order) {
    return static_cast<std::size_t>(std::ceil(order));
}

}  // namespace

double StripSystem::entry(std::size_t i, std::size_t j) const {
    if (j > i) {
        return 0.0;
    }
    if (i == j) {
        return diagonal(i);
    }
    double value = primary.value(i - j + 1);
    if (secondary) {
        value += row_coeff.at(i) * secondary->value(i - j + 1);
    }
    return value;
}

std::vector<double> StripSystem::dense() const {
    const std::size_t n = size();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            out[i * n + j] = entry(i, j);
        }
    }
    return out;
}

StripSystem assemble_single_rl(const GridFunction& a, const GridFunction& f, double c,
                               double alpha, std::size_t m) {
    check_single_order(alpha);
    if (m < 1) {
        throw ValidationError("single-term horizon must be at least 1");
    }
    require_grid(a, m, "a");
    require_grid(f, m, "f");

    StripSystem sys;
    sys.first_unknown = 1;
    sys.primary = monomial_weight_sequence(-alpha - 1.0, m + 1);
    sys.diag_shift.resize(m);
    sys.rhs.resize(m);
    for (std::size_t t = 1; t <= m; ++t) {
        sys.diag_shift[t - 1] = a(t);
        sys.rhs[t - 1] = f(t) - c * sys.primary.value(t + 1);
    }
    check_diagonal(sys);
    return sys;
}

StripSystem assemble_single_caputo(const GridFunction& a, const GridFunction& f, double c,
                                   double alpha, std::size_t m) {
    check_single_order(alpha);
    if (m < 1) {
        throw ValidationError("single-term horizon must be at least 1");
    }
    require_grid(a, m, "a");
    require_grid(f, m, "f");

    StripSystem sys;
    sys.first_unknown = 1;
    sys.primary = monomial_weight_sequence(-alpha - 1.0, m + 1);
    const WeightSequence initial = monomial_weight_sequence(-alpha, m);
    sys.diag_shift.resize(m);
    sys.rhs.resize(m);
    for (std::size_t t = 1; t <= m; ++t) {
        sys.diag_shift[t - 1] = a(t);
        sys.rhs[t - 1] = f(t) + c * initial.value(t);
    }
    check_diagonal(sys);
    return sys;
}

StripSystem assemble_two_term_rl(const GridFunction& a, const GridFunction& b,
                                 const GridFunction& f, double c, double d, double alpha,
                                 double beta, std::size_t n, InitialVectorForm form) {
    check_two_term_orders(alpha, beta);
    if (n < 2) {
        throw ValidationError("two-term horizon must be at least 2");
    }
    require_grid(a, n, "a");
    require_grid(b, n, "b");
    require_grid(f, n, "f");

    WeightCache cache;
    StripSystem sys;
    sys.first_unknown = 2;
    sys.primary = cache.get(-beta - 1.0, n + 1);
    sys.secondary = cache.get(-alpha - 1.0, n + 1);
    const WeightSequence& wb = sys.primary;
    const WeightSequence& wa = *sys.secondary;

    const std::size_t size = n - 1;
    sys.row_coeff.resize(size);
    sys.diag_shift.resize(size);
    sys.rhs.resize(size);
    for (std::size_t t = 2; t <= n; ++t) {
        const std::size_t i = t - 2;
        const double at = a(t);
        sys.row_coeff[i] = at;
        sys.diag_shift[i] = at + b(t);
        if (form == InitialVectorForm::derived) {
            const double p = wb.value(t + 1) + at * wa.value(t + 1);
            const double q = wb.value(t) + at * wa.value(t);
            sys.rhs[i] = f(t) - c * p - d * q;
        } else {
            const double p = wa.value(t + 1);
            const double q = at * wa.value(t + 1);
            sys.rhs[i] = f(t) - c * p - d * q;
        }
    }
    check_diagonal(sys);
    return sys;
}

GridFunction two_term_caputo_forcing(const GridFunction& a, const GridFunction& f,
                                     double c, double d, double alpha, double beta,
                                     std::size_t n) {
    check_two_term_orders(alpha, beta);
    require_grid(a, n, "a");
    require_grid(f, n, "f");
    const double initial[2] = {c, d - c};

    std::vector<double> g(f.values().begin(), f.values().begin() + static_cast<std::ptrdiff_t>(n + 1));
    for (std::size_t k = 0; k < order_ceiling(beta); ++k) {
        const WeightSequence h = monomial_weight_sequence(static_cast<double>(k) - beta, n + 2);
        for (std::size_t t = 2; t <= n; ++t) {
            g[t] += h.value(t - k + 1) * initial[k];
        }
    }
    for (std::size_t k = 0; k < order_ceiling(alpha); ++k) {
        const WeightSequence h = monomial_weight_sequence(static_cast<double>(k) - alpha, n + 2);
        for (std::size_t t = 2; t <= n; ++t) {
            g[t] += a(t) * h.value(t - k + 1) * initial[k];
        }
    }
    return GridFunction(std::move(g));
}

StripSystem assemble_two_term_caputo(const GridFunction& a, const GridFunction& b,
                                     const GridFunction& f, double c, double d,
                                     double alpha, double beta, std::size_t n,
                                     InitialVectorForm form) {
    const GridFunction g = two_term_caputo_forcing(a, f, c, d, alpha, beta, n);
    return assemble_two_term_rl(a, b, g, c, d, alpha, beta, n, form);
}

std::vector<double> forward_solve(const StripSystem& system, Execution exec) {
    check_diagonal(system);
    const std::size_t n = system.size();
    if (system.primary.size() < n || (system.secondary && system.secondary->size() < n) ||
        (system.secondary && system.row_coeff.size() != n) || system.diag_shift.size() != n) {
        throw ValidationError("forward_solve: inconsistent strip system");
    }
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = system.diagonal(i);
    }
    kernels::StripView view{
        .primary = system.primary.data(),
        .secondary = system.secondary ? system.secondary->data() : std::span<const double>{},
        .row_coeff = system.secondary ? std::span<const double>(system.row_coeff)
                                      : std::span<const double>{},
        .diag = diag,
        .rhs = system.rhs,
    };
    std::vector<double> x(n);
    kernels::strip_forward_substitution(view, x, exec);
    return x;
}

}  // namespace fracnabla
