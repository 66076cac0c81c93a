#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace posetpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs `posetpart <args...>` (program name excluded). Reports go to `out`,
// diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetpart::cli
