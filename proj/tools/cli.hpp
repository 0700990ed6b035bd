#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swapgame::cli {

/// Exit codes: 0 success / equilibrium, 1 negative verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swapgame::cli
