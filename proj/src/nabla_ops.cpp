#include "fracnabla/nabla_ops.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fracnabla/errors.hpp"
#include "fracnabla/specfun.hpp"

namespace fracnabla {

namespace {

void require_base_grid(const GridFunction& u, const char* op) {
    if (u.empty()) {
        throw DomainError(std::string(op) + ": empty grid function");
    }
    if (u.first() != 0) {
        throw DomainError(std::string(op) + ": grid function must start at t = 0");
    }
}

std::size_t check_fractional_order(double alpha, const char* op) {
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw DomainError(std::string(op) + ": order must lie in (0, 2)");
    }
    if (std::floor(alpha) == alpha) {
        throw DomainError(std::string(op) +
                          ": integer order, use integer_nabla instead");
    }
    return static_cast<std::size_t>(std::ceil(alpha));
}

GridFunction convolve(const GridFunction& u, double mu, std::size_t first,
                      Execution exec) {
    const std::size_t n = u.size();
    const WeightSequence weights = monomial_weight_sequence(mu, n);
    std::vector<double> out(n - first);
    kernels::history_convolution(weights.data(), u.values(), first, out, exec);
    return GridFunction(std::move(out), first);
}

}  // namespace

GridFunction nabla_sum(const GridFunction& u, double alpha, Execution exec) {
    if (!(alpha > 0.0)) {
        throw DomainError("nabla_sum: order must be positive");
    }
    require_base_grid(u, "nabla_sum");
    return convolve(u, alpha - 1.0, 0, exec);
}

GridFunction rl_difference(const GridFunction& u, double alpha, Execution exec) {
    const std::size_t order = check_fractional_order(alpha, "rl_difference");
    require_base_grid(u, "rl_difference");
    if (u.horizon() < order) {
        throw DomainError("rl_difference: horizon shorter than ceil(alpha)");
    }
    return convolve(u, -alpha - 1.0, order, exec);
}

GridFunction caputo_correction(const GridFunction& u, double alpha) {
    const std::size_t order = check_fractional_order(alpha, "caputo_difference");
    require_base_grid(u, "caputo_difference");
    const std::size_t m = u.horizon();
    if (m < order) {
        throw DomainError("caputo_difference: horizon shorter than ceil(alpha)");
    }
    std::vector<double> correction(m + 1 - order, 0.0);
    for (std::size_t k = 0; k < order; ++k) {
        // (∇^k u)(k): u(0) for k = 0, u(1) - u(0) for k = 1.
        const double initial = integer_nabla(u, static_cast<int>(k))(k);
        const WeightSequence h = monomial_weight_sequence(static_cast<double>(k) - alpha, m + 1);
        for (std::size_t t = order; t <= m; ++t) {
            correction[t - order] += h.value(t - k + 1) * initial;
        }
    }
    return GridFunction(std::move(correction), order);
}

GridFunction caputo_difference(const GridFunction& u, double alpha, Execution exec) {
    const GridFunction rl = rl_difference(u, alpha, exec);
    const GridFunction correction = caputo_correction(u, alpha);
    std::vector<double> out(rl.size());
    for (std::size_t t = rl.first(); t <= rl.horizon(); ++t) {
        out[t - rl.first()] = rl(t) - correction(t);
    }
    return GridFunction(std::move(out), rl.first());
}

GridFunction integer_nabla(const GridFunction& u, int k) {
    require_base_grid(u, "integer_nabla");
    if (k == 0) {
        return u;
    }
    if (k != 1) {
        throw DomainError("integer_nabla: unsupported order " + std::to_string(k));
    }
    if (u.horizon() < 1) {
        throw DomainError("integer_nabla: horizon must be at least 1");
    }
    std::vector<double> out(u.horizon());
    for (std::size_t t = 1; t <= u.horizon(); ++t) {
        out[t - 1] = u(t) - u(t - 1);
    }
    return GridFunction(std::move(out), 1);
}

}  // namespace fracnabla
