#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palf {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitError = 2 };

/// Runs one CLI invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace palf
