#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspectra::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the qspectra command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Series order from QSPECTRA_ORDER, or the built-in default.
int default_order();

}  // namespace qspectra::cli
