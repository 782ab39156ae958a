#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oubraid::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kBudgetRefused = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oubraid::cli
