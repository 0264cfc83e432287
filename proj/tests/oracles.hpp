#pragma once

// Test-only reference implementations, deliberately independent of the
// library's transform-based code paths: products by direct O(K^2)
// convolution, multipliers by plain per-mode loops. Used to pin down the
// fast paths.

#include <cmath>
#include <functional>

#include "gevreych/spectral_field.hpp"
#include "gevreych/systems.hpp"

namespace gevreych::testing {

/// Exact truncated convolution (u * v)(k) = sum_m u(m) v(k-m), |k| <= K.
inline SpectralField oracle_product(const SpectralField& f, const SpectralField& g) {
  const Index K = f.n_modes();
  SpectralField out(K, f.period());
  for (Index k = -K; k <= K; ++k) {
    Complex sum(0.0, 0.0);
    for (Index m = std::max(-K, k - K); m <= std::min(K, k + K); ++m) {
      sum += f.coeff(m) * g.coeff(k - m);
    }
    out.set_coeff(k, sum);
  }
  return out;
}

/// Coefficient-wise symbol application with a caller-supplied symbol.
inline SpectralField oracle_multiplier(const SpectralField& f,
                                       const std::function<Complex(Real)>& symbol) {
  SpectralField out = f;
  for (Index k = -f.n_modes(); k <= f.n_modes(); ++k) {
    out.set_coeff(k, f.coeff(k) * symbol(f.wavenumber(k)));
  }
  return out;
}

inline SpectralField oracle_P1(const SpectralField& f) {
  return oracle_multiplier(f, [](Real k) { return Complex(1.0 / (1.0 + k * k), 0.0); });
}
inline SpectralField oracle_P2(const SpectralField& f) {
  return oracle_multiplier(f, [](Real k) { return Complex(1.0 / (4.0 + k * k), 0.0); });
}
inline SpectralField oracle_P3(const SpectralField& f) {
  return oracle_multiplier(f, [](Real k) { return Complex(0.0, k); });
}
inline SpectralField oracle_P13(const SpectralField& f) {
  return oracle_multiplier(f, [](Real k) { return Complex(0.0, k / (1.0 + k * k)); });
}
inline SpectralField oracle_P23(const SpectralField& f) {
  return oracle_multiplier(f, [](Real k) { return Complex(0.0, k / (4.0 + k * k)); });
}

/// Camassa-Holm right-hand side evaluated entirely through the oracle ops.
inline SpectralField oracle_rhs_ch(const SpectralField& u) {
  const SpectralField ux = oracle_P3(u);
  const SpectralField inner =
      oracle_product(u, u) + 0.5 * oracle_product(ux, ux);
  return (-1.0) * oracle_product(u, ux) - oracle_P13(inner);
}

/// b = B(u,w) - 2 P2 v via oracle operations.
inline SpectralField oracle_b_field(const SpectralField& u, const SpectralField& w,
                                    const SpectralField& v) {
  const SpectralField B =
      oracle_P2(oracle_product(w, oracle_P13(u)) - oracle_product(u, oracle_P13(w))) +
      2.0 * oracle_P2(oracle_product(oracle_P13(u), oracle_P1(w)) -
                      oracle_product(oracle_P1(u), oracle_P13(w)));
  return B - 2.0 * oracle_P2(v);
}

/// Full three-component right-hand side via oracle operations.
inline SystemState oracle_rhs_3ch(const SystemState& state) {
  const SpectralField& u = state.components[0];
  const SpectralField& v = state.components[1];
  const SpectralField& w = state.components[2];
  const SpectralField B =
      oracle_P2(oracle_product(w, oracle_P13(u)) - oracle_product(u, oracle_P13(w))) +
      2.0 * oracle_P2(oracle_product(oracle_P13(u), oracle_P1(w)) -
                      oracle_product(oracle_P1(u), oracle_P13(w)));
  const SpectralField b = B - 2.0 * oracle_P2(v);
  const SpectralField bx = oracle_P3(B) - 2.0 * oracle_P23(v);
  const SpectralField cross = oracle_product(oracle_P13(u), oracle_P13(w)) -
                              oracle_product(oracle_P1(u), oracle_P1(w));
  SystemState out = state;
  out.components[0] = (-1.0) * oracle_product(v, oracle_P13(u)) +
                      oracle_product(oracle_P3(u), b) + 1.5 * oracle_product(u, bx) -
                      1.5 * oracle_product(u, cross);
  out.components[1] = 2.0 * oracle_product(v, oracle_P3(B)) -
                      4.0 * oracle_product(v, oracle_P23(v)) +
                      oracle_product(oracle_P3(v), B) -
                      2.0 * oracle_product(oracle_P3(v), oracle_P2(v));
  out.components[2] = (-1.0) * oracle_product(v, oracle_P13(w)) +
                      oracle_product(oracle_P3(w), b) + 1.5 * oracle_product(w, bx) +
                      1.5 * oracle_product(w, cross);
  return out;
}

inline Real max_coeff_distance(const SpectralField& a, const SpectralField& b) {
  return (a - b).max_abs_coeff();
}

inline SpectralField random_test_field(Index K, std::uint64_t seed, Real decay = 0.3) {
  GevreyParams p{1.0, decay, 1.0};
  return random_gevrey_field(p, 0.2, K, seed);
}

}  // namespace gevreych::testing
