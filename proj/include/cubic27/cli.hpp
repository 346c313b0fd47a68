#ifndef CUBIC27_CLI_HPP
#define CUBIC27_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cubic27 {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitGenericity = 2, kExitCertification = 3 };

/// Runs the command line (args excludes the program name); results go to
/// `out` unless --out is given, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cubic27

#endif
