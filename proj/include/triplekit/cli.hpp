#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triplekit::cli {

/// Runs one command; args exclude the program name. Returns the exit code:
/// 0 pass, 1 fail (including refused preconditions), 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triplekit::cli
