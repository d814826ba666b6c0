#pragma once

#include <iosfwd>

namespace segsub::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeLimit = 3;

/// Parses argv and runs one subcommand. Regular output goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace segsub::cli
