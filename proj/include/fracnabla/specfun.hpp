#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace fracnabla {

/// log|Γ(x)| together with the sign of Γ(x).
struct SignedLogGamma {
    double log_abs;
    int sign;
};

/// Throws DomainError at the poles x ∈ {0, -1, -2, ...}.
SignedLogGamma log_gamma_signed(double x);

/// Γ(x); throws DomainError at poles.
double gamma_function(double x);

/// Rising factorial t^(α) = Γ(t+α)/Γ(t), with 0^(α) = 0.
///
/// Throws DomainError if t (t ≠ 0) or t+α is a non-positive integer.
double rising_factorial(double t, double alpha);

/// Taylor monomial h_μ(t, a) = (t-a)^(μ) / Γ(μ+1).
///
/// Throws DomainError when μ is a negative integer or when t-a is outside
/// the rising factorial domain.
double taylor_monomial(double mu, double t, double a);

/// Values h_μ(k, 0) for k = 1, 2, ..., generated by the ratio recurrence
///
///     h_μ(1, 0) = 1,   h_μ(k+1, 0) = h_μ(k, 0) · (k + μ) / k.
///
/// The recurrence never touches Γ, so negative integer μ produces the exact
/// finite sequence (μ = -2 gives 1, -1, 0, 0, ...).
class WeightSequence {
public:
    WeightSequence() = default;
    WeightSequence(double mu, std::size_t count);

    double mu() const noexcept { return mu_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// h_μ(k, 0), 1-based: `value(1) == 1`.
    double value(std::size_t k) const { return values_.at(k - 1); }

    /// Zero-based view: `data()[k-1] == value(k)`.
    std::span<const double> data() const noexcept { return values_; }

    /// Appends terms until `size() >= count`; existing terms are untouched.
    void extend_to(std::size_t count);

private:
    double mu_ = 0.0;
    std::vector<double> values_;
};

WeightSequence monomial_weight_sequence(double mu, std::size_t count);

/// Weight sequences keyed by μ, grown in place on demand. Not thread-safe;
/// one cache serves one assembly or one solve.
class WeightCache {
public:
    const WeightSequence& get(double mu, std::size_t count);

private:
    std::map<double, WeightSequence> sequences_;
};

}  // namespace fracnabla
