#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauerlab::cli {

/// Exit statuses of the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

/// Runs one command. `args` excludes the program name. The report is written
/// to `out` in one piece; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauerlab::cli
