#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mukai::cli {

/// Exit codes of the command-line front end.
inline constexpr int kSuccess = 0;
inline constexpr int kCheckedFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mukai::cli
