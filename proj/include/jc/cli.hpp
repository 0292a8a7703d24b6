#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace jc::io {

enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_usage = 2 };

inline constexpr std::uint64_t default_seed = 20240531;

/// Default seed, taken from JC_SEED when that is set to a valid integer.
/// Throws std::invalid_argument for a malformed JC_SEED.
std::uint64_t seed_from_environment();

/// Runs one jcmaps invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jc::io
