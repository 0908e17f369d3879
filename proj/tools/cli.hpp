#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stereograph::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kInvariantBreach = 2;

/// Runs one invocation. `args` excludes the program name; "-" paths use `in`/`out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stereograph::cli
