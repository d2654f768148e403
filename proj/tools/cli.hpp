#pragma once

#include <string>
#include <vector>

namespace effhull::cli {

// Run the command-line tool on argv-style arguments (program name excluded).
// Exit codes: 0 success, 2 usage error, 3 negative mathematical verdict
// (inefficient / hull not contained), 4 runtime failure.
int run(std::vector<std::string> args);

}  // namespace effhull::cli
