#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxigraph {

/// Exit statuses of the command-line front end.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Runs one command. args excludes the program name. The first line written
/// to out is always the machine verdict ("true", "false", a value, or
/// "error: <token>: <detail>"). Sweep progress goes to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxigraph
