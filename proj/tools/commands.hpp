#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hritz::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computational failure or violated check
inline constexpr int kExitUsage = 2;    // invalid flags or configuration

/// Runs the command line `args` (without the program name). Tables and
/// reports go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits; scientific below 1e-3 in magnitude.
std::string format_number(double value);

}  // namespace hritz::cli
