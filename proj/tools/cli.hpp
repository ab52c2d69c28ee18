#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algres::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 success, 1 verification failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algres::cli
