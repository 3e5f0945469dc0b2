#pragma once

#include <ostream>

namespace triplet::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArguments = 2,
  kPrecondition = 3,
  kCapExceeded = 4,
};

/// Runs the command line; output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triplet::cli
