#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlab {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,         ///< success, every asserted check holds
  kExitViolation = 1,  ///< a violation or witness was found
  kExitUsage = 2,      ///< bad flags, unreadable or invalid input, I/O failure
  kExitNumerical = 3,  ///< eigensolver non-convergence or other numerical breakdown
};

/// Runs one `skewlab` invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewlab
