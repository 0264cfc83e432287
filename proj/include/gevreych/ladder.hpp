#pragma once

#include <vector>

#include "gevreych/gevrey.hpp"
#include "gevreych/types.hpp"

namespace gevreych {

/// Finite sampling of the open set {(t, delta) : 0 < delta < 1,
/// 0 <= t < a (1-delta)^sigma / (2^sigma - 1)} on which the weighted
/// supremum norm is evaluated. Times are stored as fractions of each
/// delta's admissible window, so every sample point stays inside it.
struct LadderSpec {
  Real a = 1.0;
  Real sigma = 1.0;
  std::vector<Real> delta_grid;       // increasing, inside (0,1)
  std::vector<Real> t_fraction_grid;  // increasing, inside [0,1)

  /// Window a (1-delta)^sigma / (2^sigma - 1) for one delta.
  Real time_window(Real delta) const;

  /// Largest sampled time across the grid.
  Real max_sample_time() const;

  void validate() const;

  /// 32 Chebyshev-spaced delta points in [0.02, 0.98] and 16 uniform time
  /// fractions in [0, 0.95]; the weight vanishes at both boundaries of the
  /// domain, so interior grids capture the supremum.
  static LadderSpec with_default_grids(Real a, Real sigma);
};

/// Intermediate radius delta(tau) from the ladder lemma: strictly between
/// delta and 1 for every admissible tau. Throws if tau is outside
/// [0, window).
Real delta_tau(Real delta, Real tau, Real a, Real sigma);

/// Scale inequality: for 0 <= t < window,
///   1 - delta > (1/2)^(1+1/sigma) { [(1-d)^s - t/a]^(1/s) + [(1-d)^s + (2^(s+1)-1) t/a]^(1/s) }.
InequalityReport check_scale_inequality(Real delta, Real t, Real a, Real sigma);

struct LadderIntegralReport {
  InequalityReport report;
  Real quadrature_error = 0.0;  // estimated relative error
  bool quadrature_converged = false;
};

/// Integral bound behind the contraction step: with the norm envelope
/// 1 / ((1-delta(tau))^sigma sqrt(1 - tau/(a(1-delta(tau))^sigma))) as the
/// worst-case integrand weight,
///   int_0^t dtau / (delta(tau)-delta)^sigma * envelope
///     <= a 2^(2 sigma + 3) / (1-delta)^sigma * sqrt(a(1-d)^s / (a(1-d)^s - t)).
/// Adaptive quadrature with a square-root substitution on the last 1% of the
/// interval; throws std::runtime_error if the quadrature does not converge.
LadderIntegralReport check_ladder_integral(Real delta, Real t, Real a, Real sigma,
                                           int quadrature_points = 64);

/// Constants of the lifespan bound
///   T0 = min{ 1/(2^(2s+4) L), (2^s-1) R / ((2^s-1) 2^(2s+3) L R + M) }.
struct LifespanConstants {
  Real L = 0.0;      // Lipschitz constant of the right-hand side
  Real M = 0.0;      // size of F at the initial datum
  Real R = 0.0;      // ball radius
  Real sigma = 1.0;
  Real T0 = 0.0;
};

/// Evaluates the lifespan formula exactly. Requires L > 0, R > 0, M >= 0.
LifespanConstants lifespan_T0(Real L, Real M, Real R, Real sigma);

}  // namespace gevreych
