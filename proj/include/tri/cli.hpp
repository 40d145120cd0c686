#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tri {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

/// Runs one subcommand (wp, run, laws, enumerate, transpose, certify).
/// `args` excludes the program name. Results go to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tri
