#pragma once

#include <iosfwd>

namespace pf::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerifyFailure = 1,
    kUsageError = 2,
    kNumericError = 3,
};

// Parses argv, runs one subcommand and returns the process exit status.
// Tables written to "-" and the per-criterion summary go to `out`;
// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pf::cli
