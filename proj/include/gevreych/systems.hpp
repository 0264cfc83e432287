#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gevreych/gevrey.hpp"
#include "gevreych/ladder.hpp"
#include "gevreych/spectral_field.hpp"

namespace gevreych {

enum class SystemTag { CH, TwoCH, M2CH, ThreeCH };

const char* system_name(SystemTag tag);
SystemTag system_from_name(const std::string& name);
int component_count(SystemTag tag);

/// State of one of the four systems: 1 field (CH: u), 2 fields
/// (2CH: u, rho; M2CH: u, gamma) or 3 fields (3CH: u, v, w), all sharing
/// one resolution. s_indices holds the Sobolev index each component is
/// measured at; the 2CH density rho lives one notch lower (s-1).
struct SystemState {
  SystemTag tag = SystemTag::CH;
  std::vector<SpectralField> components;
  std::vector<Real> s_indices;

  Index n_modes() const { return components.empty() ? 0 : components.front().n_modes(); }
  Real period() const {
    return components.empty() ? SpectralField::kDefaultPeriod : components.front().period();
  }
  Real max_abs_coeff() const;
  void validate() const;
};

/// Builds a state with the tag's canonical per-component indices
/// (uniform s except 2CH, which uses (s, s-1)).
SystemState make_state(SystemTag tag, std::vector<SpectralField> components, Real s);

struct StateNorm {
  Real value = 0.0;               // sum of the component norms
  std::vector<Real> breakdown;    // per-component norms
};

/// Product-space norm ||(u_1,...)||_delta = sum_i ||u_i|| at (sigma, delta,
/// s_indices[i]).
StateNorm state_norm(const SystemState& state, Real sigma, Real delta);

// Linear-space arithmetic (matching tags and resolutions).
SystemState operator+(const SystemState& a, const SystemState& b);
SystemState operator-(const SystemState& a, const SystemState& b);
SystemState operator*(Real scale, const SystemState& a);

/// Camassa-Holm right-hand side in nonlocal form:
///   F(u) = -u P3 u - P13[u^2 + 1/2 (P3 u)^2].
SystemState rhs_ch(const SystemState& state);

/// Two-component system (k_sign = +-1 flips the rho^2 term):
///   F1 = -P3(u^2/2) - P13[u^2 + 1/2 (P3 u)^2 + (k/2) rho^2],  F2 = -P3(u rho).
SystemState rhs_2ch(const SystemState& state, int k_sign = 1);

/// Modified two-component system:
///   F_u = -u P3 u - P13[u^2 + 1/2 (P3 u)^2 + (k/2) gamma^2 - (k/2)(P3 gamma)^2],
///   F_gamma = -u P3 gamma - P1[ P3(P3 u * P3 gamma) + P3 u * gamma ].
SystemState rhs_m2ch(const SystemState& state, int k_sign = 1);

/// Reconstruction of the 3CH velocity-like field b from (u, v, w):
///   b = B(u,w) - 2 P2 v,
///   B(u,w) = P2(w P13 u - u P13 w) + 2 P2(P13 u P1 w - P1 u P13 w).
SpectralField b_field(const SpectralField& u, const SpectralField& w, const SpectralField& v);

/// Three-component system right-hand side in the reduced nonlocal form.
SystemState rhs_3ch(const SystemState& state);

/// Dispatch on the state's tag.
SystemState rhs(const SystemState& state, int k_sign = 1);

/// Re-derives the 3CH right-hand side from the primitive form
/// (a = P1 u, c = P1 w, b as above; u_t = -v a_x + u_x b + 3/2 u b_x - 3/2 u (a_x c_x - a c), ...)
/// and reports the max coefficient discrepancy against rhs_out.
InequalityReport check_3ch_consistency(const SystemState& state, const SystemState& rhs_out,
                                       Real tolerance = 1e-10);

struct M2chEstimateOptions {
  int samples = 40;
  std::uint64_t seed = 2026;
  Real surplus_decay = 0.5;
};

/// Lifespan constants per system. CH/2CH/3CH use the closed forms derived
/// from the product/derivative/multiplier estimates with ball radius
/// R = ||state0||_1; the modified system has no published constants and gets
/// a randomized Lipschitz estimate over the same ball. C_s is the algebra
/// constant (empirical estimates should be passed with their safety factor
/// already applied). Throws std::domain_error when the initial norm is zero
/// (the lifespan would be unbounded).
LifespanConstants lifespan_constants(SystemTag tag, const SystemState& state0, Real C_s,
                                     Real sigma, const M2chEstimateOptions& m2ch_opts = {});

/// The Lipschitz coefficient L(r) entering the lifespan formulas, evaluated
/// at ball-size parameter r (= ||state0||_1 for the lifespan, ||.||_1 + 1 in
/// the data-to-solution experiment). Throws for M2CH, which has no closed
/// form; use m2ch_empirical_lipschitz instead.
Real lipschitz_coefficient(SystemTag tag, Real r, Real C_s, Real sigma);

/// Randomized Lipschitz estimate for the modified system over the ball of
/// radius ball_radius around state0, with a 1.10 safety factor applied.
Real m2ch_empirical_lipschitz(const SystemState& state0, Real sigma, Real ball_radius,
                              const M2chEstimateOptions& opts = {});

// --- initial-data generators -----------------------------------------------

/// A * cos(m x) / A * sin(m x).
SpectralField cosine_field(Real amplitude, Index mode, Index n_modes,
                           Real period = SpectralField::kDefaultPeriod);
SpectralField sine_field(Real amplitude, Index mode, Index n_modes,
                         Real period = SpectralField::kDefaultPeriod);

/// Exponential-decay profile u_hat(k) = A exp(-delta0 |kappa|^(1/sigma)):
/// an explicit member of the analytic/Gevrey class with radius delta0.
SpectralField decay_field(Real amplitude, Real delta0, Real sigma_decay, Index n_modes,
                          Real period = SpectralField::kDefaultPeriod);

/// Periodized peaked profile A sum_j exp(-|x - x0 - j*period|); its exact
/// coefficients are A e^{-i kappa x0} * 2/(period (1 + kappa^2)), so the
/// Fourier decay is polynomial and the analyticity radius is zero.
SpectralField peakon_field(Real amplitude, Real center, Index n_modes,
                           Real period = SpectralField::kDefaultPeriod);

}  // namespace gevreych
