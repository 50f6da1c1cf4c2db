#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oramsey::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success, HOLDS
inline constexpr int kExitFails = 1;     // FAILS, invalid input
inline constexpr int kExitResource = 2;  // resource or search bound hit
inline constexpr int kExitInternal = 3;  // internal invariant violated

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oramsey::cli
