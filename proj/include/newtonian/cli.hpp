#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtonian {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 usage or input error, 2 when `verify` finds a
// claim-computation disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtonian
