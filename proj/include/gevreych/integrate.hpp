#pragma once

#include "gevreych/picard.hpp"
#include "gevreych/systems.hpp"

namespace gevreych {

struct IntegrationResult {
  Trajectory trajectory;
  bool blew_up = false;
  Real last_valid_time = 0.0;  // final stored time (= t_end unless blew_up)
};

struct IntegrateOptions {
  int k_sign = 1;
  int store_every = 1;          // keep every n-th step in the trajectory
  Real blowup_cap = 1e10;       // max |coefficient| before aborting
};

/// Advisory explicit-stability bound for the coefficient ODE: the transport
/// term carries eigenvalues up to ~|u|_max * kappa_max, so steps obey
/// dt <= c / (kappa_max * max(1, sum_k |u_hat|)) with c = 2.5 (the classical
/// one-step-4th-order stability reach on the imaginary axis is ~2.8).
Real stability_dt_bound(const SystemState& state);

/// Classical 4th-order one-step integration of x' = F(x) on the spectral
/// coefficients. Stops early (blew_up = true) if a coefficient magnitude
/// crosses blowup_cap; the trajectory then ends at the last valid time.
IntegrationResult integrate(const SystemState& state0, Real dt, Real t_end,
                            const IntegrateOptions& opts = {});

/// H1-type functional  integral(u^2 + u_x^2) dx = period * sum (1+kappa^2)|u_hat|^2
/// (a classical Camassa-Holm invariant, used as an integrator sanity check).
Real h1_functional(const SpectralField& u);

}  // namespace gevreych
