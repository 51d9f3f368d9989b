#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modlat {

/// Runs the command line front end. `args` excludes the program name.
/// Exit codes: 0 success or property holds, 1 property fails, 2 usage or
/// input error. Results go to `out` as one JSON document per line (or DOT);
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace modlat
