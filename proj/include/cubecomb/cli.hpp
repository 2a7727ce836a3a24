#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubecomb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

// Full command line without the program name, e.g. {"validate", "--generator", "grid:3,3"}.
// Reports go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubecomb
