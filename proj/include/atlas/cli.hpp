// Command-line front end.  Exit codes: 0 success, 1 mismatch, 2 usage or
// precondition error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atlas {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atlas
