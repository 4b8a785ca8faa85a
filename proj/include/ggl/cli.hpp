#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggl {

enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_input = 2, exit_internal = 3 };

/// Runs the ggl command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ggl
