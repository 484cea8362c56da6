#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fracnabla/solver.hpp"

namespace fracnabla {

/// Raw `key = value` pairs of a problem file, after comment stripping.
struct ProblemConfig {
    std::map<std::string, std::string> entries;
};

/// Parses the line-oriented config format. `#` starts a comment; blank lines
/// are ignored. Rejects unknown and duplicate keys.
ProblemConfig parse_config(std::string_view text);

/// Builds a validated ProblemSpec: expressions for a, b and f are tabulated
/// on 0..horizon. Errors name the key (and grid point) at fault.
ProblemSpec load_problem(std::string_view config_text, std::string name = {});

/// Reads and loads a config file; the problem is named after the file stem.
ProblemSpec load_problem_file(const std::string& path);

}  // namespace fracnabla
