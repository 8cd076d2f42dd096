#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecoh {

// Runs the command-line interface on the given arguments (argv[0] excluded).
// Writes results to `out` and error messages to `err`; all output is
// deterministic for fixed arguments.  Returns the process exit code:
//   0  command succeeded (verifications passed),
//   1  a verification ran and failed,
//   2  invalid input (unknown flags, bad parameters, unreadable fixtures).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecoh
