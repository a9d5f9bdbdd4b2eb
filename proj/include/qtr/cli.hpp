#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtr {

// The qtriangle command line: group list/show, homs, factorize, classify,
// normalize, double, ybe-export, verify-hopf.  Returns 0 on success, 1 on
// domain errors (message names the failed invariant), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qtr
