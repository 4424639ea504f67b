#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques {

/// Command-line driver.  args excludes the program name.  Returns the process
/// exit code: 0 success, 1 invalid input or precondition, 2 internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriques
