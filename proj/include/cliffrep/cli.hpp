#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffrep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMath = 2,
  kUnsupported = 3,
};

/// argv excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffrep::cli
