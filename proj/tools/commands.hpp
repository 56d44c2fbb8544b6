#pragma once

#include <iosfwd>

namespace fractalmark::cli {

/// Process exit codes.
inline constexpr int kExitReal = 0;
inline constexpr int kExitOk = 0;
inline constexpr int kExitFake = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Environment variable holding the default key file path.
inline constexpr const char* kKeyEnv = "FRACTALMARK_KEY";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fractalmark::cli
