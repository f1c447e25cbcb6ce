#pragma once

#include <string>
#include <vector>

namespace flagbundle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

inline constexpr const char* kEnumerationLimitEnv = "FLAGBUNDLE_ENUMERATION_LIMIT";

struct Outcome {
  int exit_code;
  std::string output;
};

// Arguments exclude the program name. The output is a JSON report (schema 1,
// keys sorted) or, with --tsv, a flat tab-separated table.
Outcome run(const std::vector<std::string>& args);

}  // namespace flagbundle::cli
