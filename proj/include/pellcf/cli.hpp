#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellcf::cli {

/// Exit codes: 0 success or claim holds, 1 claim fails, 2 usage or input error.
enum ExitCode { kOk = 0, kClaimFails = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellcf::cli
