#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scopefoil::cli {

enum ExitCode : int {
    kOk = 0,
    kUserError = 1,
    kInternalError = 2,
};

/// Runs the command line `args` (without the program name). Human output goes
/// to `out`, diagnostics to `err`; `in` is read for `normalize -`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace scopefoil::cli
