#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quditent {

// Command-line front end (subcommands: check, scan, falsify, tomogram,
// sample). Prints a JSON run report to `out` and returns the process exit
// code: 0 = completed with all checks holding (or audit completed), 1 = an
// inequality violated in `check`, 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quditent
