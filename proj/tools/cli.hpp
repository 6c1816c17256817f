#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsetree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bench CSV for a suite config, rows ordered by instance id.
std::string bench_csv(const std::string& config, bool timing);

}  // namespace sparsetree::cli
