#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eqbif/system.hpp"

namespace eqbif::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 1;

/// Parses "hemisphere", "[p][*]pi[/q]" or a decimal number of radians.
/// Throws std::invalid_argument on malformed text.
BallRadius parse_gamma(const std::string& text);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqbif::cli
