#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plastic::cli {

enum ExitCode : int {
  kExitOk = 0,          // includes "n/a" reports
  kExitInput = 1,       // unreadable, malformed or invalid input
  kExitUsage = 2,       // bad command line
  kExitRefused = 3,     // instance exceeds a size limit
  kExitFailed = 4,      // a verification found a counterexample
};

/// Runs one command; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plastic::cli
