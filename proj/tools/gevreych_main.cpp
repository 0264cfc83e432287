// Batch driver for the Gevrey / Camassa-Holm certification suite.
//
// Subcommands: verify, estimate-constants, picard, simulate, radius,
// continuity. Exit codes: 0 all checks passed, 1 a theorem-backed check
// failed, 2 configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "gevreych/cli_commands.hpp"

using namespace gevreych;

int main(int argc, char** argv) {
  CLI::App app{"gevreych - pseudospectral certification of Camassa-Holm type systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> out_override;
  bool quiet = false;
  app.add_option("--config", config_path, "run configuration file (key = value lines)");
  app.add_option("--seed", seed_override, "override the config seed");
  app.add_option("--out", out_override, "override the output directory");
  app.add_flag("--quiet", quiet, "suppress progress output");

  auto* verify = app.add_subcommand("verify", "run the full inequality lab");
  auto* estimate =
      app.add_subcommand("estimate-constants", "estimate the product algebra constants");
  auto* picard = app.add_subcommand("picard", "Picard iteration and contraction certificate");
  auto* simulate = app.add_subcommand("simulate", "integrate the configured system");
  auto* radius = app.add_subcommand("radius", "track the analyticity radius against the floor");
  auto* continuity = app.add_subcommand("continuity", "data-to-solution continuity experiment");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    CliOverrides overrides;
    overrides.seed = seed_override;
    overrides.out_dir = out_override;
    overrides.quiet = quiet;
    cfg = prepare_run(std::move(cfg), overrides);

    if (verify->parsed()) return cmd_verify(cfg, overrides);
    if (estimate->parsed()) return cmd_estimate_constants(cfg, overrides);
    if (picard->parsed()) return cmd_picard(cfg, overrides);
    if (simulate->parsed()) return cmd_simulate(cfg, overrides);
    if (radius->parsed()) return cmd_radius(cfg, overrides);
    if (continuity->parsed()) return cmd_continuity(cfg, overrides);
    return kExitConfigError;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
}
