#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abelocus/error.hpp"

namespace abelocus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitConditionFails = 3;
inline constexpr int kExitBoundExceeded = 4;

/// Environment variable consulted for the default --tolerance.
inline constexpr const char* kToleranceEnv = "ABELOCUS_TOLERANCE";

int exit_code(ErrorKind kind) noexcept;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace abelocus::cli
