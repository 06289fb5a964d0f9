#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motive::cli {

enum ExitCode : int {
    kPass = 0,
    kUsage = 1,
    kVerificationFailed = 2,
    kBudgetExceeded = 3,
};

/// Environment variable consulted for the default enumeration budget.
inline constexpr const char *kBudgetEnv = "MOTIVE_BUDGET";

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace motive::cli
