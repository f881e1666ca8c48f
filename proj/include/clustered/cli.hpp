#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clustered {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool on `args` (without the program name). Reports
/// and artifacts without an output path go to `out`; summaries go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace clustered
