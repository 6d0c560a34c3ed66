#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nervekit {

enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitInput = 2,
  kExitLimit = 3,
};

// Runs one command line; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nervekit
