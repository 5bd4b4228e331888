#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lognls {

/// Exit codes of the command-line interface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;  ///< a verdict failed, or the run blew up
inline constexpr int kExitUsage = 2;          ///< bad arguments, configuration or IO

/// Runs the command line `args` (without the program name):
///   run --scenario <name> --config <path> [--out <dir>]
///   list-scenarios
///   residual --config <path>
///   version
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lognls
