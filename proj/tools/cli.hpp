#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace statecount::cli {

/// Exit codes: 0 success / all verified, 1 verification mismatch, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `statecount` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace statecount::cli
