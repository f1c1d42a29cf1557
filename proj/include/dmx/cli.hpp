#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dmx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmx::cli
