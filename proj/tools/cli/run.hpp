#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace workbench {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). JSON and DOT go to
/// `out`, diagnostics to `err`; "-" as input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace workbench
