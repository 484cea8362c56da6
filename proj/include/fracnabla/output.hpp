#pragma once

#include <string>

#include "fracnabla/solver.hpp"
#include "fracnabla/specfun.hpp"

namespace fracnabla {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// `t,u` header plus one row per grid point, LF line endings.
std::string emit_csv(const Solution& solution);

/// `k,h` header plus one row per weight, k starting at 1.
std::string emit_weights_csv(const WeightSequence& weights);

/// Standalone single-series line chart of u(t). Needs at least two points.
std::string emit_svg(const Solution& solution, int width = 640, int height = 400,
                     const std::string& title = {});

}  // namespace fracnabla
