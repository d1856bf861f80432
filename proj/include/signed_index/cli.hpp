#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace signed_index::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// A verification found a maximiser other than the broom, or a chain that
/// does not increase.
inline constexpr int kExitDiscovery = 2;

/// Runs one subcommand. `args` excludes the program name. Machine-readable
/// output goes to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace signed_index::cli
