#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parryscope::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kNotApplicable = 3;
inline constexpr int kVerification = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parryscope::cli
