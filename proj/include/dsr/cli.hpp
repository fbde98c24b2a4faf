#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsr::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one invocation. `args` excludes the program name. "-" or an omitted
/// path means `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dsr::cli
