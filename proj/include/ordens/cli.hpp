#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordens::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 2,
    exit_domain_error = 3,
    exit_mismatch = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordens::cli
