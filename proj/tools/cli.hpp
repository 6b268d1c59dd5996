#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fusscat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kCapRefused = 2,
  kCheckFailed = 3,  // selftest failure, failed certification, methods disagree
};

/// Runs the command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusscat::cli
