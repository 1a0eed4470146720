#ifndef RIBBON_TOOLS_CLI_HPP
#define RIBBON_TOOLS_CLI_HPP

#include <ostream>

namespace ribbon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the ribbon tool. JSON goes to `out`, the human summary and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli

#endif  // RIBBON_TOOLS_CLI_HPP
