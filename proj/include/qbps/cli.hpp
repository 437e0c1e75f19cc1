#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qbps {

// Runs the command-line front end; args exclude the program name.
// Exit codes: 0 success, 2 input error, 3 convention-violation diagnostic.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbps
