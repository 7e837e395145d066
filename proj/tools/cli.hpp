#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace regchoice::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;  // `verify` found a nonzero residual
inline constexpr int exit_invalid = 2;
inline constexpr int exit_unsolvable = 3;
inline constexpr int exit_invariant = 4;

/// Runs one command line (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace regchoice::cli
