#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscut {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitCap = 3 };

/// Runs the command-line tool on `args` (args[0] is the program name).
/// Poset input is read from a file argument, or from `in` when none is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace crosscut
