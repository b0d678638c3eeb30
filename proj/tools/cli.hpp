#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcva::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 counterexample or inconsistent table, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcva::cli
