#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphharm::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // validate found a failing check, replay output differs
  kIoError = 2,      // unreadable or malformed input
  kMathError = 3,    // disconnected graph or other mathematical precondition
  kUsageError = 4,   // bad flags or parameter values
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an output path was given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphharm::cli
