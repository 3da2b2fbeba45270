#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal {

enum class ExitStatus : int {
  ok = 0,
  bad_input = 1,
  assumption_violated = 2,
  inconsistency = 3,
};

/**
 * Command line entry point, usable in-process for tests.  `args` holds the
 * arguments after the program name (subcommand first).  Reports go to `out`,
 * diagnostics to `err`; the return value is the process exit code.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal
