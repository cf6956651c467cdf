#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdp {

// Command line entry point shared by the wdp tool and the tests. Parses
// args (without the program name), writes results to out and diagnostics
// to err, and returns the process exit code: 0 on success, 1 when a
// certificate claim fails (or, under --strict, when a report carries
// warnings), 2 on bad input or configuration.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wdp
