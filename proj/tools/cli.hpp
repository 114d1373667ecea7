#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iterforce::cli {

enum ExitCode : int {
    kOk = 0,
    kViolated = 1,
    kUsage = 2,
    kBudgetExhausted = 3,
};

/// Environment variable that replaces the default and config-file wall budgets.
inline constexpr const char* kBudgetEnv = "ITERFORCE_BUDGET_SECS";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iterforce::cli
