#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symquartic::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes. decide: holds / fails; verify: valid / invalid / malformed.
enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

/// Runs one subcommand. `args` excludes the program name. The JSON response
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symquartic::cli
