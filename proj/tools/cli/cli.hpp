#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tenstruct::cli {

/// Runs the command line `args` (without the program name). The JSON report
/// goes to `out` and a one-line human summary to `err`. Returns the exit code:
/// 0 property holds, 1 property fails, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tenstruct::cli
