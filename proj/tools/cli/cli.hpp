#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilorb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb::cli
