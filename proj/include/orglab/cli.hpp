#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orglab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // disagreement, budget or fuel exhausted
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded) and returns the exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace orglab::cli
