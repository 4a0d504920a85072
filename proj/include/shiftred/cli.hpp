#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftred {

/// Runs one command line (without the program name). Returns the exit code: 0 when every
/// check passed, 1 on a failed check, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftred
