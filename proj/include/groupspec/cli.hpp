#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace groupspec {

/// Runs one command line (without the program name), writing the JSON
/// report to `out` and diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 usage or input error, 2 cap exceeded, 3 a checked identity
/// failed.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupspec
