#pragma once

#include <ostream>

namespace hypfn::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kDomain = 3 };

/// Entry point of the `hypfn` tool. Never throws; maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypfn::cli
