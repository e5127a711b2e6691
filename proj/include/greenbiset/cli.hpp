#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gb {

/// Exit statuses of the command-line driver.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitBound = 3, kExitInternal = 4 };

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gb
