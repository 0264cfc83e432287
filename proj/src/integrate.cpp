#include "gevreych/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gevreych {

Real stability_dt_bound(const SystemState& state) {
  Real amp = 0.0;
  for (const auto& c : state.components) amp += c.coeffs().abs().sum();
  const Real kappa_max =
      2.0 * M_PI * static_cast<Real>(state.n_modes()) / state.period();
  return 2.5 / (kappa_max * std::max(1.0, amp));
}

IntegrationResult integrate(const SystemState& state0, Real dt, Real t_end,
                            const IntegrateOptions& opts) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
  if (!(t_end >= 0.0)) throw std::invalid_argument("integrate: t_end must be >= 0");
  state0.validate();
  const Real dt_max = stability_dt_bound(state0);
  if (std::min(dt, t_end) > dt_max) {
    throw std::invalid_argument("integrate: unstable step size " + std::to_string(dt) +
                                " (stability bound " + std::to_string(dt_max) + ")");
  }

  IntegrationResult result;
  result.trajectory.times.push_back(0.0);
  result.trajectory.states.push_back(state0);

  const int n_steps = static_cast<int>(std::ceil(t_end / dt - 1e-12));
  SystemState u = state0;
  Real t = 0.0;
  for (int step = 0; step < n_steps; ++step) {
    const Real h = std::min(dt, t_end - t);
    const SystemState k1 = rhs(u, opts.k_sign);
    const SystemState k2 = rhs(u + (0.5 * h) * k1, opts.k_sign);
    const SystemState k3 = rhs(u + (0.5 * h) * k2, opts.k_sign);
    const SystemState k4 = rhs(u + h * k3, opts.k_sign);
    u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    if (u.max_abs_coeff() > opts.blowup_cap || !u.components.front().all_finite()) {
      result.blew_up = true;
      break;
    }
    if ((step + 1) % opts.store_every == 0 || step + 1 == n_steps) {
      result.trajectory.times.push_back(t);
      result.trajectory.states.push_back(u);
    }
  }
  result.last_valid_time = result.trajectory.t_end();
  return result;
}

Real h1_functional(const SpectralField& u) {
  Real sum = 0.0;
  for (Index k = -u.n_modes(); k <= u.n_modes(); ++k) {
    const Real kappa = u.wavenumber(k);
    sum += (1.0 + kappa * kappa) * std::norm(u.coeff(k));
  }
  return u.period() * sum;
}

}  // namespace gevreych
