#include "gevreych/continuity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gevreych {

ContinuityReport continuity_experiment(const SystemState& state0,
                                       const SystemState& direction,
                                       const std::vector<Real>& epsilons, Real sigma,
                                       const ContinuityOptions& opts) {
  state0.validate();
  direction.validate();
  if (direction.tag != state0.tag) {
    throw std::invalid_argument("continuity_experiment: direction tag mismatch");
  }
  Real prev = std::numeric_limits<Real>::infinity();
  for (Real eps : epsilons) {
    if (eps < 0.0 || eps >= prev) {
      throw std::invalid_argument("continuity_experiment: epsilons must be positive decreasing");
    }
    if (eps > 0.0) prev = eps;
  }

  const Real n1 = state_norm(state0, sigma, 1.0).value;
  const Real L_plus =
      state0.tag == SystemTag::M2CH
          ? m2ch_empirical_lipschitz(state0, sigma, n1 + 1.0)
          : lipschitz_coefficient(state0.tag, n1 + 1.0, opts.C_s, sigma);
  if (!(L_plus > 0.0)) {
    throw std::invalid_argument("continuity_experiment: degenerate Lipschitz coefficient");
  }

  ContinuityReport report;
  report.T = 1.0 / (std::pow(2.0, 2.0 * sigma + 4.0) * L_plus);
  const LadderSpec ladder = LadderSpec::with_default_grids(report.T, sigma);
  report.t_max = ladder.max_sample_time();
  const Real dt = opts.dt > 0.0 ? opts.dt : report.t_max / 128.0;

  IntegrateOptions iopts;
  iopts.k_sign = opts.k_sign;
  const IntegrationResult base = integrate(state0, dt, report.t_max, iopts);
  if (base.blew_up) {
    throw std::runtime_error("continuity_experiment: base integration blew up");
  }

  for (Real eps : epsilons) {
    if (eps == 0.0) continue;  // 0/0, nothing to measure
    const SystemState pert0 = state0 + eps * direction;
    const Real input_dist = state_norm(pert0 - state0, sigma, 1.0).value;
    if (input_dist == 0.0) continue;
    const IntegrationResult pert = integrate(pert0, dt, report.t_max, iopts);
    if (pert.blew_up) {
      throw std::runtime_error("continuity_experiment: perturbed integration blew up");
    }
    Trajectory diff = base.trajectory;
    for (std::size_t i = 0; i < diff.states.size(); ++i) {
      diff.states[i] = pert.trajectory.state_at(diff.times[i]) - base.trajectory.states[i];
    }
    const Real output_dist = ea_norm(diff, ladder);
    report.epsilons.push_back(eps);
    report.input_dists.push_back(input_dist);
    report.output_dists.push_back(output_dist);
    report.ratios.push_back(output_dist / input_dist);
  }
  return report;
}

}  // namespace gevreych
