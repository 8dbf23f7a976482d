#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

/// Runs the `prefdist` command line. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefdist::cli
