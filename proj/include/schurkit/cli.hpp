#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurkit {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs the `schurkit` command line. `args` excludes the program name. One
/// document goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurkit
