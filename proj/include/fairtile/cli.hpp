#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairtile::cli {

// Dispatches the generate/verify/split/jacobian subcommands. args excludes the
// program name. Exit codes: 0 success or verification pass, 1 domain failure
// (solver failure, verification fail), 2 usage or IO error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fairtile::cli
