#pragma once

// Command-line front end. Every run writes one key=value record to `out`.
// Exit codes: 0 answered (infeasible included), 1 usage error, 2 input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace qospath::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qospath::cli
