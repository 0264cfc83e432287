#include "gevreych/picard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gevreych/rng.hpp"

namespace gevreych {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void Trajectory::validate() const {
  require(!times.empty() && times.size() == states.size(), "Trajectory: shape mismatch");
  require(times.front() == 0.0, "Trajectory: must start at t = 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    require(times[i] > times[i - 1], "Trajectory: times must increase");
    require(states[i].tag == states.front().tag, "Trajectory: mixed system tags");
  }
}

SystemState Trajectory::state_at(Real t) const {
  require(!times.empty(), "Trajectory: empty");
  if (t < times.front() || t > times.back() * (1.0 + 1e-12)) {
    throw std::invalid_argument("Trajectory: time outside stored range");
  }
  if (t >= times.back()) return states.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times.begin());
  const std::size_t lo = hi - 1;
  const Real w = (t - times[lo]) / (times[hi] - times[lo]);
  return (1.0 - w) * states[lo] + w * states[hi];
}

Trajectory Trajectory::constant(const SystemState& u0, Real t_end) {
  require(t_end > 0.0, "Trajectory::constant: t_end must be > 0");
  Trajectory traj;
  traj.times = {0.0, t_end};
  traj.states = {u0, u0};
  return traj;
}

Real ea_norm(const Trajectory& traj, const LadderSpec& ladder) {
  traj.validate();
  ladder.validate();
  if (traj.t_end() < ladder.max_sample_time() * (1.0 - 1e-12)) {
    throw std::invalid_argument("ea_norm: trajectory too short for the ladder");
  }
  Real best = 0.0;
  for (Real delta : ladder.delta_grid) {
    const Real window = ladder.time_window(delta);
    const Real decay = std::pow(1.0 - delta, ladder.sigma);
    for (Real frac : ladder.t_fraction_grid) {
      const Real t = frac * window;
      const SystemState u = traj.state_at(t);
      const Real weight = decay * std::sqrt(1.0 - t / (ladder.a * decay));
      best = std::max(best, state_norm(u, ladder.sigma, delta).value * weight);
    }
  }
  return best;
}

Trajectory apply_picard_operator(const RhsFn& rhs_fn, const SystemState& u0,
                                 const Trajectory& traj, Real quadrature_dt) {
  traj.validate();
  require(quadrature_dt > 0.0, "apply_picard_operator: quadrature_dt must be > 0");
  const Real t_end = traj.t_end();
  const int n_steps = std::max(1, static_cast<int>(std::ceil(t_end / quadrature_dt - 1e-12)));
  const Real h = t_end / n_steps;

  Trajectory out;
  out.times.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.times.push_back(0.0);
  out.states.push_back(u0);

  // Cumulative composite Simpson: each step adds h/6 (F_j + 4 F_mid + F_next).
  SystemState accum = 0.0 * u0;
  SystemState f_left = rhs_fn(traj.state_at(0.0));
  for (int j = 0; j < n_steps; ++j) {
    const Real t0 = j * h;
    const Real t1 = (j + 1) * h;
    const SystemState f_mid = rhs_fn(traj.state_at(0.5 * (t0 + t1)));
    const SystemState f_right = rhs_fn(traj.state_at(std::min(t1, t_end)));
    accum = accum + (h / 6.0) * (f_left + 4.0 * f_mid + f_right);
    out.times.push_back(t1);
    out.states.push_back(u0 + accum);
    f_left = f_right;
  }
  return out;
}

PicardResult picard_iterate(const RhsFn& rhs_fn, const SystemState& u0,
                            const LadderSpec& ladder, int iterations,
                            Real quadrature_dt) {
  require(iterations >= 1, "picard_iterate: iterations must be >= 1");
  ladder.validate();
  const Real t_end = ladder.max_sample_time();
  require(t_end > 0.0, "picard_iterate: ladder samples only t = 0");
  if (quadrature_dt <= 0.0) quadrature_dt = t_end / 256.0;

  PicardResult result;
  Trajectory current = Trajectory::constant(u0, t_end);
  const Trajectory base = current;  // u^0, also the ball center
  result.iterates.push_back(current);

  for (int n = 0; n < iterations; ++n) {
    Trajectory next = apply_picard_operator(rhs_fn, u0, current, quadrature_dt);
    // Distances are ladder norms of state differences along both trajectories.
    Trajectory diff_prev = next;
    Trajectory diff_ball = next;
    for (std::size_t i = 0; i < next.states.size(); ++i) {
      diff_prev.states[i] = next.states[i] - current.state_at(next.times[i]);
      diff_ball.states[i] = next.states[i] - u0;
    }
    Real residual = 0.0;
    Real ball_distance = 0.0;
    try {
      residual = ea_norm(diff_prev, ladder);
      ball_distance = ea_norm(diff_ball, ladder);
    } catch (const std::overflow_error&) {
      result.saturated = true;
      result.iterates.push_back(next);
      break;
    }
    result.residuals.push_back(residual);
    result.ball_distances.push_back(ball_distance);
    result.max_coeffs.push_back(next.states.back().max_abs_coeff());
    result.iterates.push_back(next);
    current = std::move(next);
  }
  return result;
}

ContractionResult contraction_factor(const RhsFn& rhs_fn, const SystemState& u0,
                                     const LadderSpec& ladder, int trials,
                                     std::uint64_t seed, const ContractionOptions& opts) {
  require(trials >= 1, "contraction_factor: trials must be >= 1");
  ladder.validate();
  const Real t_end = ladder.max_sample_time();
  require(t_end > 0.0, "contraction_factor: ladder samples only t = 0");
  // Trials are constant in time, so the integral operator output is linear
  // in t and a coarse quadrature grid is already exact.
  const Real dt = opts.quadrature_dt > 0.0 ? opts.quadrature_dt : t_end / 32.0;
  const Index K = u0.n_modes();

  auto random_state_in_ball = [&](std::uint64_t trial_seed, Rng& scale_rng) {
    SystemState pert = u0;
    for (std::size_t i = 0; i < pert.components.size(); ++i) {
      const GevreyParams p{ladder.sigma, 1.0, u0.s_indices[i]};
      pert.components[i] = random_gevrey_field(
          p, opts.surplus_decay, K, split_seed(trial_seed, static_cast<std::uint64_t>(i)),
          u0.period());
    }
    const Real norm1 = state_norm(pert, ladder.sigma, 1.0).value;
    if (norm1 == 0.0) return u0;
    // ||.||_delta <= ||.||_1 keeps the constant trajectory inside the ball
    // at every rung.
    return u0 + (opts.ball_radius * scale_rng.uniform(0.2, 0.95) / norm1) * pert;
  };

  ContractionResult result;
  Rng scale_rng(split_seed(seed, "contraction_scales"));
  for (int trial = 0; trial < trials; ++trial) {
    const SystemState su = random_state_in_ball(split_seed(seed, static_cast<std::uint64_t>(2 * trial)), scale_rng);
    const SystemState sv = random_state_in_ball(split_seed(seed, static_cast<std::uint64_t>(2 * trial + 1)), scale_rng);
    Trajectory tu = Trajectory::constant(su, t_end);
    Trajectory tv = Trajectory::constant(sv, t_end);

    Trajectory diff_in = tu;
    diff_in.states[0] = su - sv;
    diff_in.states[1] = su - sv;
    const Real denom = ea_norm(diff_in, ladder);
    if (denom < 1e-300) {
      ++result.skipped;
      continue;
    }

    const Trajectory gu = apply_picard_operator(rhs_fn, u0, tu, dt);
    const Trajectory gv = apply_picard_operator(rhs_fn, u0, tv, dt);
    Trajectory diff_out = gu;
    for (std::size_t i = 0; i < gu.states.size(); ++i) {
      diff_out.states[i] = gu.states[i] - gv.state_at(gu.times[i]);
    }
    const Real ratio = ea_norm(diff_out, ladder) / denom;
    result.ratios.push_back(ratio);
    result.max_ratio = std::max(result.max_ratio, ratio);
  }
  return result;
}

}  // namespace gevreych
