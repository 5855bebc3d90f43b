#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixhorn {

// Exit codes of the fixhorn tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // e.g. an end clause is false under the solution
    kExitInputError = 2, // bad flags, unreadable or malformed input, non-Horn input
};

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fixhorn
