#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlfsr {

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit status: 0 for success or a positive verdict, 1 for a negative
// verdict, 2 for usage or spec errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace nlfsr
