#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coursewise::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kBadInput = 3,  // CSV or rule-file parse error, inconsistent records
    kUnknownStudent = 4,
    kIoError = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coursewise::cli
