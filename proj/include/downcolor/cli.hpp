#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace downcolor {

// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_input = 1,
  exit_verification_failed = 2,
  exit_cap_exceeded = 3,
};

// Runs one CLI invocation. args[0] is the program name. "-" as an input
// path reads `in`; output goes to `out` unless -o is given; diagnostics go
// to `err`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace downcolor
