#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (argv[0] included). Summaries, JSON and CSV go to
/// out; diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdyn::cli
