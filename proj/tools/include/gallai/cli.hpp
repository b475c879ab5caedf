#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBudget = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation of the `gallai` tool. `args` excludes the program
/// name. Files named "-" (or omitted input files) read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gallai::cli
