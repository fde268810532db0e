#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skein {

// Runs the command line given the arguments after the program name.
// Returns the process exit code: 0 success, 1 usage or parse error,
// 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein
