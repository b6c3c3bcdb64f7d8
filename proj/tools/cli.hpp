#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skein::cli {

// Runs one invocation; args exclude the program name. Returns the exit code:
// 0 success, 1 domain error or failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
