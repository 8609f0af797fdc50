#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sharp::cli {

/// Runs one sharpcheck invocation (arguments without the program name),
/// writing the JSON report to `out` and diagnostics to `err`. Returns the
/// exit status: 0 pass, 1 fail, 2 indeterminate, 3 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sharp::cli
