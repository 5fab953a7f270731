#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricfil {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitTolerance = 3 };

// args excludes the program name. Output goes to out, one-line diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricfil
