#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lissaknot::cli {

// Runs the full command-line interface against the given argument list
// (without argv[0]) and streams. Returns the process exit code:
// 0 success, 1 verification failure, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lissaknot::cli
