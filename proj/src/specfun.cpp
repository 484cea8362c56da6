#include "fracnabla/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracnabla/errors.hpp"

namespace fracnabla {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::floor(x) == x;
}

// Γ is finite and well away from overflow below this magnitude.
constexpr double kDirectGammaLimit = 170.0;

}  // namespace

SignedLogGamma log_gamma_signed(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("log_gamma_signed: non-finite argument");
    }
    if (is_nonpositive_integer(x)) {
        throw DomainError("log_gamma_signed: pole of gamma at " + std::to_string(x));
    }
    int sign = 1;
    if (x < 0.0) {
        // Γ alternates sign between consecutive negative integers and is
        // negative on (-1, 0).
        const auto cell = static_cast<long long>(std::floor(x));
        sign = (cell % 2 == 0) ? 1 : -1;
    }
    return {std::lgamma(x), sign};
}

double gamma_function(double x) {
    if (is_nonpositive_integer(x)) {
        throw DomainError("gamma: pole at " + std::to_string(x));
    }
    return std::tgamma(x);
}

double rising_factorial(double t, double alpha) {
    if (t == 0.0) {
        return 0.0;
    }
    if (is_nonpositive_integer(t)) {
        throw DomainError("rising_factorial: t = " + std::to_string(t) +
                          " is a pole of gamma");
    }
    const double top = t + alpha;
    if (is_nonpositive_integer(top)) {
        throw DomainError("rising_factorial: t + alpha = " + std::to_string(top) +
                          " is a pole of gamma");
    }
    if (std::abs(t) < kDirectGammaLimit && std::abs(top) < kDirectGammaLimit) {
        const double num = std::tgamma(top);
        const double den = std::tgamma(t);
        if (std::isfinite(num) && std::isfinite(den) && num != 0.0 && den != 0.0) {
            return num / den;
        }
    }
    const SignedLogGamma num = log_gamma_signed(top);
    const SignedLogGamma den = log_gamma_signed(t);
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

double taylor_monomial(double mu, double t, double a) {
    if (mu < 0.0 && std::floor(mu) == mu) {
        throw DomainError("taylor_monomial: mu = " + std::to_string(mu) +
                          " is a negative integer");
    }
    return rising_factorial(t - a, mu) / gamma_function(mu + 1.0);
}

WeightSequence::WeightSequence(double mu, std::size_t count) : mu_(mu) {
    extend_to(count);
}

void WeightSequence::extend_to(std::size_t count) {
    if (count <= values_.size()) {
        return;
    }
    values_.reserve(count);
    if (values_.empty()) {
        values_.push_back(1.0);
    }
    while (values_.size() < count) {
        const auto k = static_cast<double>(values_.size());
        values_.push_back(values_.back() * (k + mu_) / k);
    }
}

WeightSequence monomial_weight_sequence(double mu, std::size_t count) {
    return WeightSequence(mu, count);
}

const WeightSequence& WeightCache::get(double mu, std::size_t count) {
    auto [it, inserted] = sequences_.try_emplace(mu, mu, count);
    if (!inserted) {
        it->second.extend_to(count);
    }
    return it->second;
}

}  // namespace fracnabla
