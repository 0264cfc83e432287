#pragma once

#include <vector>

#include "gevreych/integrate.hpp"
#include "gevreych/picard.hpp"
#include "gevreych/systems.hpp"

namespace gevreych {

struct ContinuityReport {
  std::vector<Real> epsilons;
  std::vector<Real> input_dists;   // ||U0_eps - U0||_1
  std::vector<Real> output_dists;  // ||U_eps - U||_{E_T} on the shared grid
  std::vector<Real> ratios;        // output / input; bounded by 2
  Real T = 0.0;                    // uniform existence time of the family
  Real t_max = 0.0;                // largest ladder sample time integrated to
};

struct ContinuityOptions {
  Real C_s = 1.0;   // algebra constant (safety factor applied by the caller)
  Real dt = 0.0;    // 0 -> t_max / 128
  int k_sign = 1;
};

/// Data-to-solution continuity experiment: perturbs the initial state along
/// `direction` by each epsilon, integrates both solutions over the window of
/// the uniform time
///   T = 1 / (2^(2 sigma + 4) L(||U0||_1 + 1))
/// (the Lipschitz coefficient evaluated at norm + 1, which covers the whole
/// perturbed family), and measures the ratio of the E_T distance to the
/// initial distance. Both branches share the time grid and the ladder, so
/// discretization bias cancels in the ratio.
ContinuityReport continuity_experiment(const SystemState& state0,
                                       const SystemState& direction,
                                       const std::vector<Real>& epsilons, Real sigma,
                                       const ContinuityOptions& opts = {});

}  // namespace gevreych
