#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace caysum {

/// Runs one CLI invocation (argv without the program name).  Exit status:
/// 0 = verdict true / success, 1 = verdict false / construction failure,
/// 2 = usage, parse, or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace caysum
