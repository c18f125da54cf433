#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klrsk::cli {

enum ExitStatus { kOk = 0, kCheckFailed = 1, kUsage = 2, kBound = 3 };

// args excludes the program name.  Reports go to out, progress and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klrsk::cli
