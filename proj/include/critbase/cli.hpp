#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critbase {

// Runs the command line given by args (program name excluded).  Records go
// to `out` or the file named by --out; usage diagnostics go to `err`.
// Exit status: 0 success, 1 domain error (JSON error record on out),
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critbase
