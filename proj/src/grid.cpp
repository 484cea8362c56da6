#include "fracnabla/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracnabla/errors.hpp"

namespace fracnabla {

GridFunction::GridFunction(std::vector<double> values, std::size_t first)
    : first_(first), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ValidationError("GridFunction: non-finite value at t = " +
                                  std::to_string(first_ + i));
        }
    }
}

GridFunction GridFunction::constant(double value, std::size_t horizon) {
    return GridFunction(std::vector<double>(horizon + 1, value));
}

double GridFunction::operator()(std::size_t t) const {
    if (!defined_at(t)) {
        throw std::out_of_range("GridFunction: t = " + std::to_string(t) +
                                " outside the grid");
    }
    return values_[t - first_];
}

}  // namespace fracnabla
