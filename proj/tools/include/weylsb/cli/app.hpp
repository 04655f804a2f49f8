#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylsb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kDegreeCap = 3,
  kInvariantViolation = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`; diagnostics go to `err` in text mode and into a JSON error object
/// on `out` in json mode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylsb::cli
