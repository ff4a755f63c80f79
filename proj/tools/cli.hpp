#pragma once

#include <iosfwd>

namespace isosq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

/// Parses argv and runs one subcommand. CSV/JSON goes to `out` unless
/// --output is given; diagnostics and CSV-mode warnings go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isosq::cli
