#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace simplex_kde::cli {

inline constexpr std::string_view kToolName = "simplex-kde";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

//! Runs the command line `args` (args[0] is the program name). Summaries go to
//! `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplex_kde::cli
