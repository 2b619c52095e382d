#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bikei::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 domain failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bikei::cli
