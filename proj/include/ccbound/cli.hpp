#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccb::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ccb::cli
