#pragma once

#include <string>
#include <vector>

namespace ctconfig::cli {

/* Runs the command line. Exit codes: 0 success, 1 validation/verification
 * failure, 2 usage error. */
int run(const std::vector<std::string>& args);

}  // namespace ctconfig::cli
