#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace waldkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitCap = 3,
};

/// Runs one waldkit invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace waldkit
