#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar {

/// Runs the planarob command line (args excludes the program name). Writes
/// exactly one JSON object to `out`. Returns 0 on success, 1 on a domain
/// error, 2 on a parse or usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace planar
