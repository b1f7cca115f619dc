#pragma once

// Command-line front end: `area`, `eval` and `verify` subcommands writing
// one JSON object per record (or key/value text for `area` and `eval`).

#include <iosfwd>
#include <string>
#include <vector>

namespace ellipsurf {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

/// Runs one command line. `args` excludes the program name. Records go to
/// `out`, usage messages and error reports to `err`. Returns the exit code:
/// 0 on success, 1 on unusable input or a domain error, 2 when a result did
/// not converge or a verification check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellipsurf
