#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagdesic::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kUsageError = 2,
  kUndetermined = 3,
};

/// Runs `flagdesic <args...>` (args excludes the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagdesic::cli
