#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhalton::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args[0] is the program name. CSV goes to `out` only
// after the whole result is computed; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip-safe text at `digits` significant digits.
std::string format_double(double value, int digits = 17);

}  // namespace rhalton::cli
