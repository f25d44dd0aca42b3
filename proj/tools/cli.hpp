#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combfam::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Runs one `combfam` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combfam::cli
