#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diamgraph {

/// Exit codes: 0 all checks pass, 1 a verification failed (the report is
/// still written), 2 input or usage error.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the command line tool. "-" or a missing input path reads `in`.
int cli_dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diamgraph
