#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfx::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 for success or true, 1 for false or Nothing, 2 for usage and
/// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfx::cli
