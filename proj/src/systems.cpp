#include "gevreych/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevreych/rng.hpp"

namespace gevreych {

namespace {

using MK = MultiplierKind;

SpectralField P1(const SpectralField& f) { return apply_multiplier(f, MK::P1); }
SpectralField P2(const SpectralField& f) { return apply_multiplier(f, MK::P2); }
SpectralField P3(const SpectralField& f) { return apply_multiplier(f, MK::P3); }
SpectralField P13(const SpectralField& f) { return apply_multiplier(f, MK::P13); }
SpectralField P23(const SpectralField& f) { return apply_multiplier(f, MK::P23); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Real g_factor(Real sigma) { return std::exp(-sigma) * std::pow(sigma, sigma); }

}  // namespace

const char* system_name(SystemTag tag) {
  switch (tag) {
    case SystemTag::CH: return "ch";
    case SystemTag::TwoCH: return "2ch";
    case SystemTag::M2CH: return "m2ch";
    case SystemTag::ThreeCH: return "3ch";
  }
  return "?";
}

SystemTag system_from_name(const std::string& name) {
  if (name == "ch") return SystemTag::CH;
  if (name == "2ch") return SystemTag::TwoCH;
  if (name == "m2ch") return SystemTag::M2CH;
  if (name == "3ch") return SystemTag::ThreeCH;
  throw std::invalid_argument("unknown system tag: " + name);
}

int component_count(SystemTag tag) {
  switch (tag) {
    case SystemTag::CH: return 1;
    case SystemTag::TwoCH: return 2;
    case SystemTag::M2CH: return 2;
    case SystemTag::ThreeCH: return 3;
  }
  return 0;
}

Real SystemState::max_abs_coeff() const {
  Real m = 0.0;
  for (const auto& c : components) m = std::max(m, c.max_abs_coeff());
  return m;
}

void SystemState::validate() const {
  require(static_cast<int>(components.size()) == component_count(tag),
          "SystemState: component count does not match tag");
  require(components.size() == s_indices.size(), "SystemState: missing Sobolev indices");
  for (const auto& c : components) {
    require(c.n_modes() == n_modes() && c.period() == period(),
            "SystemState: components must share resolution and period");
  }
}

SystemState make_state(SystemTag tag, std::vector<SpectralField> components, Real s) {
  SystemState state;
  state.tag = tag;
  state.components = std::move(components);
  switch (tag) {
    case SystemTag::CH: state.s_indices = {s}; break;
    case SystemTag::TwoCH: state.s_indices = {s, s - 1.0}; break;
    case SystemTag::M2CH: state.s_indices = {s, s}; break;
    case SystemTag::ThreeCH: state.s_indices = {s, s, s}; break;
  }
  state.validate();
  return state;
}

StateNorm state_norm(const SystemState& state, Real sigma, Real delta) {
  StateNorm out;
  out.breakdown.reserve(state.components.size());
  for (std::size_t i = 0; i < state.components.size(); ++i) {
    const GevreyParams p{sigma, delta, state.s_indices[i]};
    const Real n = gevrey_norm(state.components[i], p);
    out.breakdown.push_back(n);
    out.value += n;
  }
  return out;
}

namespace {

void check_compatible(const SystemState& a, const SystemState& b) {
  require(a.tag == b.tag, "state arithmetic: mismatched tags");
  require(a.components.size() == b.components.size(), "state arithmetic: mismatched shape");
}

}  // namespace

SystemState operator+(const SystemState& a, const SystemState& b) {
  check_compatible(a, b);
  SystemState out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
  return out;
}

SystemState operator-(const SystemState& a, const SystemState& b) {
  check_compatible(a, b);
  SystemState out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    out.components[i] = a.components[i] - b.components[i];
  }
  return out;
}

SystemState operator*(Real scale, const SystemState& a) {
  SystemState out = a;
  for (auto& c : out.components) c = scale * c;
  return out;
}

SystemState rhs_ch(const SystemState& state) {
  require(state.tag == SystemTag::CH, "rhs_ch: wrong tag");
  const SpectralField& u = state.components[0];
  const SpectralField ux = P3(u);
  const SpectralField inner = product(u, u) + 0.5 * product(ux, ux);
  SystemState out = state;
  out.components[0] = (-1.0) * product(u, ux) - P13(inner);
  return out;
}

SystemState rhs_2ch(const SystemState& state, int k_sign) {
  require(state.tag == SystemTag::TwoCH, "rhs_2ch: wrong tag");
  require(k_sign == 1 || k_sign == -1, "rhs_2ch: k_sign must be +-1");
  const SpectralField& u = state.components[0];
  const SpectralField& rho = state.components[1];
  const SpectralField ux = P3(u);
  const SpectralField inner =
      product(u, u) + 0.5 * product(ux, ux) + (0.5 * k_sign) * product(rho, rho);
  SystemState out = state;
  out.components[0] = (-0.5) * P3(product(u, u)) - P13(inner);
  out.components[1] = (-1.0) * P3(product(u, rho));
  return out;
}

SystemState rhs_m2ch(const SystemState& state, int k_sign) {
  require(state.tag == SystemTag::M2CH, "rhs_m2ch: wrong tag");
  require(k_sign == 1 || k_sign == -1, "rhs_m2ch: k_sign must be +-1");
  const SpectralField& u = state.components[0];
  const SpectralField& gamma = state.components[1];
  const SpectralField ux = P3(u);
  const SpectralField gx = P3(gamma);
  const SpectralField inner = product(u, u) + 0.5 * product(ux, ux) +
                              (0.5 * k_sign) * product(gamma, gamma) -
                              (0.5 * k_sign) * product(gx, gx);
  SystemState out = state;
  out.components[0] = (-1.0) * product(u, ux) - P13(inner);
  out.components[1] = (-1.0) * product(u, gx) - P1(P3(product(ux, gx)) + product(ux, gamma));
  return out;
}

SpectralField b_field(const SpectralField& u, const SpectralField& w, const SpectralField& v) {
  const SpectralField B = P2(product(w, P13(u)) - product(u, P13(w))) +
                          2.0 * P2(product(P13(u), P1(w)) - product(P1(u), P13(w)));
  return B - 2.0 * P2(v);
}

SystemState rhs_3ch(const SystemState& state) {
  require(state.tag == SystemTag::ThreeCH, "rhs_3ch: wrong tag");
  const SpectralField& u = state.components[0];
  const SpectralField& v = state.components[1];
  const SpectralField& w = state.components[2];

  const SpectralField B = P2(product(w, P13(u)) - product(u, P13(w))) +
                          2.0 * P2(product(P13(u), P1(w)) - product(P1(u), P13(w)));
  const SpectralField b = B - 2.0 * P2(v);
  const SpectralField b_deriv = P3(B) - 2.0 * P23(v);
  const SpectralField cross = product(P13(u), P13(w)) - product(P1(u), P1(w));

  SystemState out = state;
  out.components[0] = (-1.0) * product(v, P13(u)) + product(P3(u), b) +
                      1.5 * product(u, b_deriv) - 1.5 * product(u, cross);
  out.components[1] = 2.0 * product(v, P3(B)) - 4.0 * product(v, P23(v)) +
                      product(P3(v), B) - 2.0 * product(P3(v), P2(v));
  out.components[2] = (-1.0) * product(v, P13(w)) + product(P3(w), b) +
                      1.5 * product(w, b_deriv) + 1.5 * product(w, cross);
  return out;
}

SystemState rhs(const SystemState& state, int k_sign) {
  switch (state.tag) {
    case SystemTag::CH: return rhs_ch(state);
    case SystemTag::TwoCH: return rhs_2ch(state, k_sign);
    case SystemTag::M2CH: return rhs_m2ch(state, k_sign);
    case SystemTag::ThreeCH: return rhs_3ch(state);
  }
  throw std::logic_error("rhs: unknown tag");
}

InequalityReport check_3ch_consistency(const SystemState& state, const SystemState& rhs_out,
                                       Real tolerance) {
  require(state.tag == SystemTag::ThreeCH, "check_3ch_consistency: wrong tag");
  require(rhs_out.tag == SystemTag::ThreeCH, "check_3ch_consistency: wrong rhs tag");
  const SpectralField& u = state.components[0];
  const SpectralField& v = state.components[1];
  const SpectralField& w = state.components[2];

  // Primitive-variable evaluation: same algebra, independently grouped.
  const SpectralField a = P1(u);
  const SpectralField c = P1(w);
  const SpectralField b = b_field(u, w, v);
  const SpectralField ax = P3(a);
  const SpectralField cx = P3(c);
  const SpectralField bx = P3(b);
  const SpectralField q = product(ax, cx) - product(a, c);

  const SpectralField ut = (-1.0) * product(v, ax) + product(P3(u), b) +
                           1.5 * product(u, bx) - 1.5 * product(u, q);
  const SpectralField vt = 2.0 * product(v, bx) + product(P3(v), b);
  const SpectralField wt = (-1.0) * product(v, cx) + product(P3(w), b) +
                           1.5 * product(w, bx) + 1.5 * product(w, q);

  const Real disc = std::max({(ut - rhs_out.components[0]).max_abs_coeff(),
                              (vt - rhs_out.components[1]).max_abs_coeff(),
                              (wt - rhs_out.components[2]).max_abs_coeff()});
  return make_report("threech_consistency", 0.0, state.s_indices[0], 0.0,
                     std::numeric_limits<Real>::quiet_NaN(), disc, tolerance);
}

Real lipschitz_coefficient(SystemTag tag, Real r, Real C_s, Real sigma) {
  const Real g = g_factor(sigma);
  switch (tag) {
    case SystemTag::CH:
      return 2.0 * C_s * (g + 2.0) * r;
    case SystemTag::TwoCH:
      return 4.0 * C_s * (g + 1.0) * r;
    case SystemTag::ThreeCH: {
      const Real c1 = 90.0 + 27.0 * g;
      const Real c2 = 14.0 + 6.0 * g;
      return C_s * C_s * r * r * c1 + C_s * r * c2;
    }
    case SystemTag::M2CH:
      throw std::invalid_argument(
          "lipschitz_coefficient: no closed form for m2ch (use the empirical estimate)");
  }
  throw std::logic_error("lipschitz_coefficient: unknown tag");
}

/// Randomized Lipschitz sampling for the modified system over the ball of
/// radius ball_radius around state0 in every X_delta. A 1.10 safety factor
/// is applied, matching the policy for the empirical algebra constant.
Real m2ch_empirical_lipschitz(const SystemState& state0, Real sigma, Real ball_radius,
                              const M2chEstimateOptions& opts) {
  require(state0.tag == SystemTag::M2CH, "m2ch_empirical_lipschitz: wrong tag");
  const Index K = state0.n_modes();
  const std::vector<std::pair<Real, Real>> delta_pairs = {
      {0.8, 0.4}, {0.6, 0.2}, {0.9, 0.45}, {0.5, 0.1}};

  auto perturbation = [&](std::uint64_t seed) {
    std::vector<SpectralField> comps;
    for (std::size_t i = 0; i < state0.components.size(); ++i) {
      const GevreyParams p{sigma, 1.0, state0.s_indices[i]};
      comps.push_back(random_gevrey_field(p, opts.surplus_decay, K,
                                          split_seed(seed, static_cast<std::uint64_t>(i)),
                                          state0.period()));
    }
    SystemState pert = state0;
    pert.components = std::move(comps);
    return pert;
  };

  Real L_hat = 0.0;
  Rng rng(split_seed(opts.seed, "m2ch_scales"));
  for (int i = 0; i < opts.samples; ++i) {
    SystemState p1s = perturbation(split_seed(opts.seed, static_cast<std::uint64_t>(2 * i)));
    SystemState p2s = perturbation(split_seed(opts.seed, static_cast<std::uint64_t>(2 * i + 1)));
    const Real n1 = state_norm(p1s, sigma, 1.0).value;
    const Real n2 = state_norm(p2s, sigma, 1.0).value;
    if (n1 == 0.0 || n2 == 0.0) continue;
    const SystemState z1 = state0 + (ball_radius * rng.uniform(0.3, 1.0) / n1) * p1s;
    const SystemState z2 = state0 + (ball_radius * rng.uniform(0.3, 1.0) / n2) * p2s;
    const SystemState df = rhs_m2ch(z1, 1) - rhs_m2ch(z2, 1);
    for (const auto& [delta, delta_prime] : delta_pairs) {
      const Real den = state_norm(z1 - z2, sigma, delta).value;
      if (den == 0.0) continue;
      const Real num = state_norm(df, sigma, delta_prime).value *
                       std::pow(delta - delta_prime, sigma);
      L_hat = std::max(L_hat, num / den);
    }
  }
  return 1.10 * L_hat;
}

namespace {

/// Size constant of the modified system at its initial datum: the sup over
/// the ladder of ||F(z0)||_delta (1-delta)^sigma, with the same 1.10 safety
/// factor as the Lipschitz estimate.
Real m2ch_empirical_size(const SystemState& state0, Real sigma) {
  Real M_hat = 0.0;
  const SystemState f0 = rhs_m2ch(state0, 1);
  for (int j = 1; j <= 19; ++j) {
    const Real delta = 0.05 * j;
    M_hat = std::max(M_hat,
                     state_norm(f0, sigma, delta).value * std::pow(1.0 - delta, sigma));
  }
  return 1.10 * M_hat;
}

}  // namespace

LifespanConstants lifespan_constants(SystemTag tag, const SystemState& state0, Real C_s,
                                     Real sigma, const M2chEstimateOptions& m2ch_opts) {
  require(C_s > 0.0, "lifespan_constants: C_s must be > 0");
  state0.validate();
  require(state0.tag == tag, "lifespan_constants: state tag mismatch");
  const Real n1 = state_norm(state0, sigma, 1.0).value;
  if (n1 == 0.0) {
    throw std::domain_error("lifespan_constants: zero initial norm (lifespan unbounded)");
  }
  const Real g = g_factor(sigma);
  const Real R = n1;
  Real L = 0.0, M = 0.0;
  switch (tag) {
    case SystemTag::CH:
      L = lipschitz_coefficient(tag, n1, C_s, sigma);
      M = C_s * (0.5 * g + 1.0) * n1 * n1;
      break;
    case SystemTag::TwoCH:
      L = lipschitz_coefficient(tag, n1, C_s, sigma);
      M = 0.5 * C_s * (g + 5.0) * n1 * n1;
      break;
    case SystemTag::ThreeCH:
      L = lipschitz_coefficient(tag, n1, C_s, sigma);
      M = C_s * n1 * n1 * (C_s * n1 * (7.5 + 2.25 * g) + (4.5 + 1.5 * g));
      break;
    case SystemTag::M2CH:
      L = m2ch_empirical_lipschitz(state0, sigma, R, m2ch_opts);
      M = m2ch_empirical_size(state0, sigma);
      require(L > 0.0, "lifespan_constants: degenerate empirical Lipschitz estimate");
      break;
  }
  return lifespan_T0(L, M, R, sigma);
}

SpectralField cosine_field(Real amplitude, Index mode, Index n_modes, Real period) {
  return synthesize({{mode, Complex(0.5 * amplitude, 0.0)},
                     {-mode, Complex(0.5 * amplitude, 0.0)}},
                    n_modes, period);
}

SpectralField sine_field(Real amplitude, Index mode, Index n_modes, Real period) {
  return synthesize({{mode, Complex(0.0, -0.5 * amplitude)},
                     {-mode, Complex(0.0, 0.5 * amplitude)}},
                    n_modes, period);
}

SpectralField decay_field(Real amplitude, Real delta0, Real sigma_decay, Index n_modes,
                          Real period) {
  require(delta0 > 0.0 && sigma_decay >= 1.0, "decay_field: need delta0 > 0, sigma >= 1");
  SpectralField f(n_modes, period);
  for (Index k = -n_modes; k <= n_modes; ++k) {
    const Real kappa = f.wavenumber(k);
    f.set_coeff(k, Complex(amplitude * std::exp(-delta0 * std::pow(std::abs(kappa),
                                                                   1.0 / sigma_decay)),
                           0.0));
  }
  return f;
}

SpectralField peakon_field(Real amplitude, Real center, Index n_modes, Real period) {
  SpectralField f(n_modes, period);
  for (Index k = -n_modes; k <= n_modes; ++k) {
    const Real kappa = f.wavenumber(k);
    const Complex phase(std::cos(kappa * center), -std::sin(kappa * center));
    f.set_coeff(k, amplitude * 2.0 / (period * (1.0 + kappa * kappa)) * phase);
  }
  f.symmetrize();
  return f;
}

}  // namespace gevreych
