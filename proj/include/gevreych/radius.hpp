#pragma once

#include <optional>
#include <vector>

#include "gevreych/integrate.hpp"
#include "gevreych/systems.hpp"

namespace gevreych {

struct FitResult {
  Real delta_hat = 0.0;   // fitted decay rate, clamped at 0
  Real slope = 0.0;       // fitted power-law exponent of log k
  Real residual = 0.0;    // rms residual of the least-squares fit
  int usable_modes = 0;
};

/// Least-squares fit of log|u_hat(k)| against
///   -delta * kappa^(1/sigma) + slope * log k + const
/// over k in [k_min, k_max], using modes above the noise floor. Throws
/// std::runtime_error when fewer than 4 usable modes remain.
FitResult fit_radius(const SpectralField& f, Real sigma, Index k_min, Index k_max);

/// Radius the lifespan theorem guarantees at time t: inverting
/// t < T0 (1-delta)^sigma / (2^sigma - 1) and rescaling the paper's unit
/// initial radius to delta_init gives
///   delta_floor(t) = delta_init (1 - ((2^sigma-1) t / T0)^(1/sigma)), clamped at 0.
Real radius_floor(Real t, Real T0, Real sigma, Real delta_init);

struct RadiusSample {
  Real t = 0.0;
  Real delta_hat = 0.0;           // NaN when below the noise floor
  Real delta_floor = 0.0;
  Real fit_residual = 0.0;        // NaN when no fit was possible
  bool resolution_limited = false;
  bool below_noise_floor = false;
};

struct RadiusSeries {
  std::vector<RadiusSample> samples;
  Real sigma_assumed = 1.0;
  Real T0 = 0.0;
  Real certified_window = 0.0;    // T0 / (2^sigma - 1), where the floor reaches 0
  bool floor_satisfied = true;    // delta_hat >= delta_floor - 1e-3 wherever defined
  bool any_fit_defined = false;
};

struct TrackOptions {
  Real C_s = 1.0;            // algebra constant (with safety factor applied)
  Index fit_k_min = 4;
  Index fit_k_max = 0;       // 0 -> n_modes
  Real dt = 1e-3;
  Real t_end = 0.0;          // 0 -> the certified window
  int k_sign = 1;
  int store_every = 1;
  Real floor_tolerance = 1e-3;
};

/// Integrates the system, fits the analyticity radius at every stored time
/// and attaches the guaranteed floor anchored at the t = 0 fit. Fits whose
/// top-of-range amplitude sits below the noise floor carry the
/// resolution-limited flag; when fewer than 4 modes are usable the fit is
/// replaced by the resolution cap
///   delta_cap = ln(max_amp / noise_floor) / kappa_max^(1/sigma),
/// the largest decay rate the grid can still distinguish from zero tail.
RadiusSeries track_radius(const SystemState& state0, Real sigma,
                          const TrackOptions& opts = {});

}  // namespace gevreych
