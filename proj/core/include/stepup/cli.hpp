#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stepup {

/// Command dispatch for the `stepup` tool. `args` excludes the program
/// name. Exit codes: 0 pass, 1 usage error, 2 semantic failure, 3 guard
/// exceeded. Identical inputs produce byte-identical output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace stepup
