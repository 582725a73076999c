#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurhr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out` unless an output path is set; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurhr::cli
