#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddeform {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitComputation = 1,
    kExitUsage = 2,
};

/// Environment variable naming the directory that relative --out paths resolve against.
inline constexpr const char* kOutputDirEnv = "DDEFORM_OUTPUT_DIR";

/// Runs the CLI on `args` (program name excluded). Data goes to `out` unless
/// --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ddeform
