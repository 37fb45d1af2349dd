#pragma once

#include <iosfwd>

namespace witnesslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;

/// Entry point shared by the executable and the tests. Reads
/// WITNESSLAB_TOL from the environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace witnesslab::cli
