#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totalchoose {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,        // verify found a violation, oracle proved infeasibility, trials failed
  kExitDeltaTooSmall = 2,
  kExitListTooSmall = 3,
  kExitBudget = 4,        // oracle gave up
  kExitUsage = 64,        // bad arguments or unparsable input
  kExitInternal = 70,     // an internal guarantee broke
};

/// Runs the tool on `args` (without the program name).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totalchoose
