#include <doctest.h>

#include <cmath>

#include "gevreych/gevrey.hpp"
#include "oracles.hpp"

using namespace gevreych;
using namespace gevreych::testing;

TEST_CASE("gevrey_norm: frozen direct-sum values") {
  // Constant 1: only the k = 0 term, weight 1 for every parameter choice.
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 8);
  CHECK(gevrey_norm(one, {1.0, 0.7, 3.0}) == doctest::Approx(1.0).epsilon(1e-14));

  // Unit-mass single frequency (coefficients 1/sqrt(2) at k = +-1):
  // norm^2 = 2 * (1+1)^0 * e^{2*1*1} * 1/2 = e^2.
  const Real a = 1.0 / std::sqrt(2.0);
  const SpectralField mode1 = synthesize({{1, Complex(a, 0.0)}, {-1, Complex(a, 0.0)}}, 8);
  CHECK(gevrey_norm(mode1, {1.0, 1.0, 0.0}) == doctest::Approx(2.71828182845904523).epsilon(1e-13));

  // cos 2x at sigma=1, delta=0.5, s=1: norm^2 = 2 * 5 * e^2 * 1/4 = 2.5 e^2.
  const SpectralField cos2x = synthesize({{2, Complex(0.5, 0.0)}, {-2, Complex(0.5, 0.0)}}, 8);
  CHECK(gevrey_norm(cos2x, {1.0, 0.5, 1.0}) == doctest::Approx(4.29798095009).epsilon(1e-11));
}

TEST_CASE("gevrey_norm: homogeneity, triangle, monotonicity") {
  const GevreyParams p{1.5, 0.3, 1.0};
  const SpectralField f = random_gevrey_field(p, 0.4, 32, 101);
  const SpectralField g = random_gevrey_field(p, 0.4, 32, 102);

  CHECK(gevrey_norm(3.5 * f, p) == doctest::Approx(3.5 * gevrey_norm(f, p)).epsilon(1e-12));
  CHECK(gevrey_norm(f + g, p) <= gevrey_norm(f, p) + gevrey_norm(g, p) + 1e-12);

  // Monotone in delta and in s.
  CHECK(gevrey_norm(f, {1.5, 0.2, 1.0}) <= gevrey_norm(f, {1.5, 0.3, 1.0}) * (1 + 1e-12));
  CHECK(gevrey_norm(f, {1.5, 0.3, 0.5}) <= gevrey_norm(f, {1.5, 0.3, 1.0}) * (1 + 1e-12));
}

TEST_CASE("gevrey_norm: saturation reported, not Inf") {
  SpectralField f(400, SpectralField::kDefaultPeriod);
  f.set_coeff(400, Complex(1e-3, 0.0));
  f.set_coeff(-400, Complex(1e-3, 0.0));
  f.set_coeff(0, Complex(1.0, 0.0));
  // 2 * delta * 400 = 800 > 700 at delta = 1.
  const NormValue nv = gevrey_norm_checked(f, {1.0, 1.0, 0.0});
  CHECK(nv.saturated);
  CHECK(std::isfinite(nv.value));
  CHECK_THROWS_AS(gevrey_norm(f, {1.0, 1.0, 0.0}), std::overflow_error);
}

TEST_CASE("check_embedding: delta, s and sigma directions") {
  const GevreyParams p{1.0, 0.4, 2.0};
  const SpectralField f = random_gevrey_field(p, 0.4, 64, 7);

  CHECK(check_embedding(f, p, {1.0, 0.2, 2.0}).holds);
  CHECK(check_embedding(f, p, {1.0, 0.4, 1.0}).holds);
  CHECK(check_embedding(f, p, {2.0, 0.4, 2.0}).holds);

  // Not comparable: two fields changed at once.
  CHECK_THROWS_AS(check_embedding(f, p, GevreyParams{1.0, 0.2, 1.0}), std::invalid_argument);
  // Wrong direction.
  CHECK_THROWS_AS(check_embedding(f, p, GevreyParams{1.0, 0.5, 2.0}), std::invalid_argument);
}

TEST_CASE("check_embedding: randomized sweep") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GevreyParams p{1.0 + 0.5 * (seed % 3), 0.1 + 0.01 * (seed % 7), 2.0};
    const SpectralField f = random_gevrey_field(p, 0.5, 32, 900 + seed);
    CHECK(check_embedding(f, p, {p.sigma, 0.5 * p.delta, p.s}).holds);
    CHECK(check_embedding(f, p, {p.sigma, p.delta, p.s - 0.7}).holds);
    CHECK(check_embedding(f, p, {p.sigma + 1.0, p.delta, p.s}).holds);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("check_derivative_estimate: frozen hand evaluation") {
  // f with coefficients 1/sqrt(2) at k = +-1: ||f||_{1,1,0} = e, and
  // lhs = ||dx f||_{1,0.5,0} = e^{1/2}, rhs = e^{-1} (0.5)^{-1} e = 2.
  const Real a = 1.0 / std::sqrt(2.0);
  const SpectralField f = synthesize({{1, Complex(a, 0.0)}, {-1, Complex(a, 0.0)}}, 8);
  const InequalityReport r = check_derivative_estimate(f, 1.0, 0.0, 1.0, 0.5);
  CHECK(r.lhs == doctest::Approx(1.64872127070013).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.holds);
}

TEST_CASE("check_derivative_estimate: zero field and parameter errors") {
  const SpectralField zero = SpectralField::zero(8);
  const InequalityReport r = check_derivative_estimate(zero, 1.0, 0.0, 1.0, 0.5);
  CHECK(r.lhs == 0.0);
  CHECK(r.holds);
  const SpectralField f = random_test_field(8, 3);
  CHECK_THROWS_AS(check_derivative_estimate(f, 1.0, 0.0, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(check_derivative_estimate(f, 1.0, 0.0, 0.5, 0.7), std::invalid_argument);
}

TEST_CASE("check_derivative_estimate: randomized sweep never fails") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Real sigma = (seed % 3 == 0) ? 1.0 : ((seed % 3 == 1) ? 1.5 : 2.0);
    const GevreyParams p{sigma, 0.5, 1.0};
    const SpectralField f = random_gevrey_field(p, 0.5, 32, 5000 + seed);
    CHECK(check_derivative_estimate(f, sigma, 1.0, 0.5, 0.2).holds);
  }
}

TEST_CASE("sup_g_factor: closed forms and grid argmax") {
  CHECK(sup_g_factor(1.0) == doctest::Approx(0.13533528323661270).epsilon(1e-12));
  CHECK(sup_g_factor(2.0) == doctest::Approx(0.29305022221974686).epsilon(1e-12));
  for (Real sigma : {1.0, 1.5, 2.5, 4.0}) {
    const GridSearchResult grid = grid_search_g(sigma);
    CHECK(std::abs(grid.max_value - sup_g_factor(sigma)) < 1e-8);
    CHECK(std::abs(grid.argmax - sigma) < 1e-4);
  }
  CHECK_THROWS_AS(sup_g_factor(0.5), std::invalid_argument);
}

TEST_CASE("product ratio: constant witness and frozen cosine value") {
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 16);
  CHECK(product_norm_ratio(one, one, {1.0, 0.3, 2.0}) == doctest::Approx(1.0).epsilon(1e-13));

  // f = g = cos x at sigma=1, delta=0.1, s=1:
  // ||fg||^2 = 1/4 + (5/8) e^{0.4}, ||f||^2 = e^{0.2}.
  const SpectralField cosx = synthesize({{1, Complex(0.5, 0.0)}, {-1, Complex(0.5, 0.0)}}, 16);
  const Real expect = std::sqrt(0.25 + 0.625 * std::exp(0.4)) / std::exp(0.2);
  CHECK(expect == doctest::Approx(0.890269628545).epsilon(1e-11));
  CHECK(product_norm_ratio(cosx, cosx, {1.0, 0.1, 1.0}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("check_product_estimates: stability across seeds and hypothesis check") {
  CHECK_THROWS_AS(check_product_estimates(1.0, 0.5, 0.2, 10, 1, 16), std::invalid_argument);

  const ProductConstantEstimate a = check_product_estimates(1.0, 2.0, 0.2, 2000, 11, 32);
  const ProductConstantEstimate b = check_product_estimates(1.0, 2.0, 0.2, 2000, 99, 32);
  CHECK(a.C_s_hat > 0.0);
  CHECK(a.Cbar_s_hat > 0.0);
  CHECK(std::abs(a.C_s_hat - b.C_s_hat) / a.C_s_hat < 0.05);
  CHECK(std::abs(a.Cbar_s_hat - b.Cbar_s_hat) / a.Cbar_s_hat < 0.05);
}

TEST_CASE("check_multiplier_bounds: extremal cases hold with ratio attained") {
  const GevreyParams p{1.0, 0.3, 1.5};
  // Constant field: P2 ratio is exactly 1/4.
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 8);
  for (const auto& r : check_multiplier_bounds(one, p)) {
    CHECK(r.holds);
    if (r.check == "P2_bound") CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-14));
  }
  // Single frequency |k| = 1: the P13 ratio 1/2 is attained.
  const Real a = 1.0 / std::sqrt(2.0);
  const SpectralField mode1 = synthesize({{1, Complex(a, 0.0)}, {-1, Complex(a, 0.0)}}, 8);
  for (const auto& r : check_multiplier_bounds(mode1, p)) {
    CHECK(r.holds);
    if (r.check == "P13_bound") CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-13));
  }
}

TEST_CASE("check_multiplier_bounds: randomized sweep") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GevreyParams p{1.0 + (seed % 2), 0.2, 1.5};
    const SpectralField f = random_gevrey_field(p, 0.5, 32, 7000 + seed);
    for (const auto& r : check_multiplier_bounds(f, p)) {
      CHECK(r.holds);
      if (r.check != "P1_norm_identity") CHECK(r.margin >= -1e-12);
    }
  }
}

TEST_CASE("check_multiplier_bounds: injected P2 fault is caught") {
  const GevreyParams p{1.0, 0.3, 1.5};
  const SpectralField f = random_gevrey_field(p, 0.5, 32, 4242);
  MultiplierBoundOptions opts;
  opts.p2_symbol_scale = 1.25;
  bool p2_failed = false;
  for (const auto& r : check_multiplier_bounds(f, p, opts)) {
    if (r.check == "P2_bound") p2_failed = !r.holds;
  }
  CHECK(p2_failed);
}

TEST_CASE("random_gevrey_field: deterministic per seed, finite nonzero norm") {
  const GevreyParams p{1.0, 0.5, 2.0};
  const SpectralField f1 = random_gevrey_field(p, 0.5, 32, 123);
  const SpectralField f2 = random_gevrey_field(p, 0.5, 32, 123);
  for (Index k = -32; k <= 32; ++k) CHECK(f1.coeff(k) == f2.coeff(k));
  const Real n = gevrey_norm(f1, p);
  CHECK(std::isfinite(n));
  CHECK(n > 0.0);
  CHECK_THROWS_AS(random_gevrey_field(p, 0.0, 32, 1), std::invalid_argument);
}
