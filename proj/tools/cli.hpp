#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weakhopf::cli {

/// Runs one command line (without the program name). Returns 0 when every
/// check passed, 1 on a check failure and 2 on usage, parse or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weakhopf::cli
