#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bdt::cli {

/// Process exit statuses.
enum ExitCode : int {
  kSuccess = 0,
  kFixtureFailure = 1,
  kUsage = 2,
  kDegenerate = 3,
  kIoError = 4,
};

struct Terminal {
  /// Colorize PASS/FAIL markers. The caller decides (tty and NO_COLOR).
  bool color = false;
};

/// Runs `bdt` with `args` (args[0] is the program name) and returns the exit
/// status. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        Terminal terminal = {});

}  // namespace bdt::cli
