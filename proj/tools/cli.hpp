#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlebound::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericFailure = 2,
  kViolationsFound = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlebound::cli
