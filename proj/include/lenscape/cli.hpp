// Command-line surface. dispatch() takes argv (without the program name) plus
// explicit streams so the whole CLI is testable in-process.
//
// Rotation vectors on the command line are given in EXPANSION ORDER: --rot
// r1,...,rn lists the rotation number of the first chain coefficient of
// [a1,...,an] first.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscape {

// exit code: 0 success, 2 invalid input, 3 resource limit
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace lenscape
