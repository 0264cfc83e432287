#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gevreych/ladder.hpp"
#include "gevreych/systems.hpp"

namespace gevreych {

using RhsFn = std::function<SystemState(const SystemState&)>;

/// Time-stamped sequence of states of one system; times start at 0 and
/// increase. States between samples are recovered by linear interpolation
/// of the coefficients.
struct Trajectory {
  std::vector<Real> times;
  std::vector<SystemState> states;

  void validate() const;
  Real t_end() const { return times.empty() ? 0.0 : times.back(); }

  /// Linear interpolation in t; throws if t is outside [0, t_end()].
  SystemState state_at(Real t) const;

  static Trajectory constant(const SystemState& u0, Real t_end);
};

/// Weighted supremum norm over the ladder grid:
///   sup ||u(t)||_delta (1-delta)^sigma sqrt(1 - t/(a(1-delta)^sigma)),
/// evaluated at t = fraction * window(delta) for every grid pair. A finite
/// maximum, hence a lower bound of the true supremum that grows with grid
/// refinement. Component Sobolev indices come from the states. Throws if
/// the trajectory does not reach the ladder's largest sample time.
Real ea_norm(const Trajectory& traj, const LadderSpec& ladder);

struct PicardResult {
  std::vector<Trajectory> iterates;     // u^0, u^1, ..., u^N
  std::vector<Real> residuals;          // ||u^{n+1} - u^n||_{E_a}
  std::vector<Real> ball_distances;     // ||u^{n+1} - u^0(const)||_{E_a}
  std::vector<Real> max_coeffs;         // max |coeff| over the new iterate
  bool saturated = false;               // an E_a evaluation hit the exponent cap
};

/// Picard iteration for the integral form u(t) = u0 + int_0^t F(u(tau)) dtau.
/// Each sweep applies the integral operator with composite Simpson steps of
/// size quadrature_dt on a uniform time grid covering the ladder samples.
/// Residuals are distances between successive iterates in the ladder norm.
PicardResult picard_iterate(const RhsFn& rhs_fn, const SystemState& u0,
                            const LadderSpec& ladder, int iterations,
                            Real quadrature_dt = 0.0);

/// One application of the integral operator to a trajectory (exposed for the
/// contraction experiment).
Trajectory apply_picard_operator(const RhsFn& rhs_fn, const SystemState& u0,
                                 const Trajectory& traj, Real quadrature_dt);

struct ContractionOptions {
  Real ball_radius = 1.0;          // R of the surrounding ball
  Real surplus_decay = 0.5;        // decay margin of the trial perturbations
  Real quadrature_dt = 0.0;        // 0 -> ladder max time / 256
};

struct ContractionResult {
  std::vector<Real> ratios;  // per-trial ||G(u)-G(v)|| / ||u-v||
  Real max_ratio = 0.0;
  int skipped = 0;           // degenerate pairs
};

/// Samples time-constant trial pairs u0 + p inside the ball of radius R,
/// applies the integral operator to both and measures the contraction ratio
/// in the ladder norm.
ContractionResult contraction_factor(const RhsFn& rhs_fn, const SystemState& u0,
                                     const LadderSpec& ladder, int trials,
                                     std::uint64_t seed, const ContractionOptions& opts = {});

}  // namespace gevreych
