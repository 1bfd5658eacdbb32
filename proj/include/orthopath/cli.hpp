#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orthopath {

// Dispatches one invocation (args exclude the program name). Exit code 0 on
// success / all predicates passing, 1 on a predicate failure, 2 on usage
// errors. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace orthopath
