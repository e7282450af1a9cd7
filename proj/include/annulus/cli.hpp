#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace annulus {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitDomain = 2, kExitIo = 3 };

// args excludes the program name. JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace annulus
