#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace allplaces {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace allplaces
