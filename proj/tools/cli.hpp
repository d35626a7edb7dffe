#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nevgcd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kHypothesisRejected = 2,
  kUsageError = 3,
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  Format format = Format::Json;
  std::string out_path;  // empty: standard output (or the output directory default)
  std::uint64_t seed = 1;
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "NEVGCD_OUTPUT_DIR";

/// args excludes the program name. Reports go to `out` (or a file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nevgcd::cli
