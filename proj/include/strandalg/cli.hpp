#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strandalg {

// Entry point of the strandalg command line tool; args excludes the program
// name. Returns 0 on success, 1 when a verification fails and 2 on input
// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strandalg
