#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chutes::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 1,
  kCertificationRefused = 2,
  kResourceGuard = 3,
};

/// Environment variable naming the directory that relative --output paths are
/// resolved against.
inline constexpr const char* kOutputDirEnv = "CHUTES_OUTPUT_DIR";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chutes::cli
