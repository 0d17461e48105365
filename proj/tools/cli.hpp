#pragma once

#include <iosfwd>

namespace dynlist::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitInvariant = 3;  // bandwidth, protocol or liveness
inline constexpr int kExitUsage = 4;

/// Entry point of the dynlist tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dynlist::cli
