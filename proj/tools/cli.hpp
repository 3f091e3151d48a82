#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace camopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInputError = 2;

/// Environment variable naming the default RunConfig file.
inline constexpr const char* kConfigEnv = "CAMOPT_CONFIG";

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace camopt::cli
