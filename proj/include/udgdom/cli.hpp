#pragma once

#include <ostream>

namespace udgdom::cli {

// Exit codes of the udgdom tool.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInvalidInstance = 2;
inline constexpr int kSizeLimit = 3;
inline constexpr int kViolation = 4;

// Subcommands: generate, solve, exact, reduce, ratio, verify-claim.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udgdom::cli
