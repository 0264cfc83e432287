#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gevreych/config.hpp"

namespace gevreych {

// Exit-code contract, stable for CI:
//   0  every theorem-backed check passed
//   1  a theorem-backed check failed
//   2  configuration error
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool quiet = false;
};

/// Applies --seed/--out overrides and creates the output directory.
RunConfig prepare_run(RunConfig cfg, const CliOverrides& overrides);

int cmd_verify(const RunConfig& cfg, const CliOverrides& overrides);
int cmd_estimate_constants(const RunConfig& cfg, const CliOverrides& overrides);
int cmd_picard(const RunConfig& cfg, const CliOverrides& overrides);
int cmd_simulate(const RunConfig& cfg, const CliOverrides& overrides);
int cmd_radius(const RunConfig& cfg, const CliOverrides& overrides);
int cmd_continuity(const RunConfig& cfg, const CliOverrides& overrides);

/// Loads the constants file if present and returns the safety-scaled algebra
/// constant 1.10 * C_s_hat for (sigma, s); estimates and persists it first
/// when the cell is missing.
Real algebra_constant(const RunConfig& cfg, Real sigma, bool quiet);

}  // namespace gevreych
