#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace condis {

// Runs one batch command. `args` excludes the program name. Returns the
// process exit status: 0 on success (including "unequal" verdicts), 1 on
// domain errors, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace condis
