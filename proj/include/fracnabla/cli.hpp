#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracnabla {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitUsage = 1,
    kExitNumerical = 2,
};

/// Entry point of the `fracnabla` tool. `args` excludes the program name.
///
///   solve   --config <path> [--csv <path>] [--svg <path>] [--tol 1e-9] [--paper-pq]
///   verify  --config <path> [--tol 1e-9]
///   weights --mu <real> --count <int>
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracnabla
