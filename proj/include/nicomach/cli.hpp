#pragma once

#include <string>
#include <vector>

namespace nicomach {

// Parses and runs one command line (without the program name). Prints the
// report to stdout (and to --out atomically when given), diagnostics to
// stderr. Returns the process exit code: 0 all checks pass or are
// informational, 1 at least one check failed, 2 usage error.
int execute(std::vector<std::string> args);

}  // namespace nicomach
