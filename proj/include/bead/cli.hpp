#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bead {

// exit codes: 0 ok, 1 validation failure, 2 usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// shortest-round-trip-safe: 17 significant digits, C locale
std::string format_double(double v);

}  // namespace bead
