#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liebranch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kGoldenMismatch = 2,
  kNumericFailure = 3,  // overflow, failed certificate, search cap exhausted
};

// Environment variable consulted when --cache-dir is not given.
inline constexpr const char* kCacheDirEnv = "LIEBRANCH_CACHE_DIR";

// Entry point of the command-line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liebranch::cli
