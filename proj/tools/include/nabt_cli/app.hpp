#pragma once

#include <string>
#include <vector>

namespace nabt::cli {

enum ExitCode : int { kSuccess = 0, kSuiteFailure = 1, kInputError = 2, kLimitExhausted = 3 };

struct Outcome {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). `max_cosets_env` is
/// the value of NABT_MAX_COSETS, if set; the flag takes precedence.
Outcome run(const std::vector<std::string>& args, const char* max_cosets_env = nullptr);

}  // namespace nabt::cli
