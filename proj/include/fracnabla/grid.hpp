#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracnabla {

/// Real-valued function on the integer grid {first, ..., horizon}.
///
/// Grids produced by the fractional operators may start past zero
/// (points where the operator is undefined are simply not stored).
/// Every stored value is finite.
class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(std::vector<double> values, std::size_t first = 0);

    static GridFunction constant(double value, std::size_t horizon);

    template <class F>
    static GridFunction tabulate(std::size_t horizon, F&& f) {
        std::vector<double> values(horizon + 1);
        for (std::size_t t = 0; t <= horizon; ++t) {
            values[t] = f(t);
        }
        return GridFunction(std::move(values));
    }

    std::size_t first() const noexcept { return first_; }
    std::size_t horizon() const noexcept { return first_ + values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    bool defined_at(std::size_t t) const noexcept {
        return t >= first_ && t - first_ < values_.size();
    }

    /// u(t); throws std::out_of_range outside {first, ..., horizon}.
    double operator()(std::size_t t) const;

    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const GridFunction&) const = default;

private:
    std::size_t first_ = 0;
    std::vector<double> values_;
};

}  // namespace fracnabla
