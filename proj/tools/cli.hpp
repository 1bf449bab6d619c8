#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellrec::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    verification_failure = 2,
    internal_mismatch = 3,
};

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellrec::cli
