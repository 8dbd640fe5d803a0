#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCertificateFailed = 3;
inline constexpr int kExitRuntime = 4;

// Environment variable naming the default prime-cache directory.
inline constexpr const char* kCacheDirEnv = "DIVBOUND_CACHE_DIR";

// Runs one invocation. `args` excludes the program name. JSON lines go to
// `out` (or to --output), the human summary and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divbound::cli
