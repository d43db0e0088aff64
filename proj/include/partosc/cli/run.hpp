#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partosc::cli {

// Runs one CLI invocation.  args excludes the program name.
// Exit status: 0 success, 2 usage error, 3 numeric/boundary/capacity error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partosc::cli
