#pragma once

#include <ostream>

namespace schlomilch::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

// Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schlomilch::cli
