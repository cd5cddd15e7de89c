#pragma once

#include <iosfwd>

namespace bcast {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitInput = 2, kExitInvariant = 3 };

/// Parses argv and runs one subcommand. Machine output goes to `out`,
/// diagnostics to `err`; `in` serves input path "-".
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bcast
