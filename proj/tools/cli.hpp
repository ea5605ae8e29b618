#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rfot {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  // violation or infeasibility found
inline constexpr int kExitUsage = 2;    // usage, parse or cap error

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfot
