#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tangent::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 usage or parse error, 2 domain or runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangent::cli
