#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ins::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs `ins` with argv-style arguments (args[0] is the program name) and
/// returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ins::cli
