#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDefect = 1; // a check exceeded its tolerance, or a computation failed
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out` (or
// to --out), diagnostics to `err`.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qlat::cli
