#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gevreych/systems.hpp"

namespace gevreych {

/// Configuration problems exit with code 2; theorem-backed check failures
/// with code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key-value run configuration ("key = value" lines, '#' comments).
/// Unknown keys are rejected so typos cannot silently change a run.
/// Initial-data values use small generator expressions:
///   cos:A:m | sin:A:m | decay:A:delta0[:sigma] | peakon:A:x0
///   | random:delta:surplus | modes:k:re:im[;k:re:im...] | zero
struct RunConfig {
  Index resolution_k = 128;
  Real period = SpectralField::kDefaultPeriod;
  std::vector<Real> sigma_list = {1.0, 1.5, 2.0};
  Real s = 2.0;
  std::vector<Real> delta_list = {0.1, 0.4};
  int samples = 1000;
  std::uint64_t seed = 20260810;
  std::string system = "ch";
  int k_sign = 1;
  std::string initial_u = "cos:0.1:1";
  std::string initial_rho = "zero";
  std::string initial_gamma = "zero";
  std::string initial_v = "zero";
  std::string initial_w = "zero";
  std::string perturb_u = "cos:1:1";
  std::string perturb_rho = "zero";
  std::string perturb_gamma = "zero";
  std::string perturb_v = "zero";
  std::string perturb_w = "zero";
  Real dt_model = 1e-3;
  Real t_end_model = 0.0;  // 0 -> certified window
  int picard_iterations = 40;
  int contraction_trials = 50;
  std::vector<Real> epsilons = {1e-2, 1e-3, 1e-4};
  Index fit_k_min = 4;
  Index fit_k_max = 0;  // 0 -> resolution_k
  int quadrature_points = 64;
  std::string constants_file = "constants.json";
  std::string out_dir = "out";
  std::string fault_injection = "none";  // none | p2_symbol (test hook)
  Real ladder_delta_min = 0.02;
  Real ladder_delta_max = 0.98;
  int ladder_delta_count = 32;
  Real ladder_t_fraction_max = 0.95;
  int ladder_t_count = 16;

  void validate() const;

  /// Ladder grids from the config (the `a` scale is supplied per run).
  LadderSpec ladder(Real a, Real sigma) const;

  /// Builds the configured initial state / perturbation direction.
  SystemState initial_state() const;
  SystemState perturbation_direction() const;
};

/// Parses a config file; missing file or malformed/unknown keys throw
/// ConfigError.
RunConfig load_config(const std::string& path);

/// Parses one generator expression into a field.
SpectralField make_field_from_spec(const std::string& spec, Index n_modes, Real period,
                                   Real sigma, Real s, std::uint64_t seed);

}  // namespace gevreych
