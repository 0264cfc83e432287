#include <doctest.h>

#include <cmath>

#include "gevreych/systems.hpp"
#include "oracles.hpp"

using namespace gevreych;
using namespace gevreych::testing;

namespace {

SystemState random_3ch_state(Index K, std::uint64_t seed, Real s = 2.0) {
  return make_state(SystemTag::ThreeCH,
                    {random_test_field(K, seed), random_test_field(K, seed + 101),
                     random_test_field(K, seed + 202)},
                    s);
}

}  // namespace

TEST_CASE("state construction and norms") {
  const SpectralField u = cosine_field(0.2, 1, 16);
  const SpectralField rho = sine_field(0.1, 1, 16);
  const SystemState z = make_state(SystemTag::TwoCH, {u, rho}, 2.0);
  CHECK(z.s_indices[0] == 2.0);
  CHECK(z.s_indices[1] == 1.0);

  const StateNorm n = state_norm(z, 1.0, 0.5);
  CHECK(n.breakdown.size() == 2);
  CHECK(n.value == doctest::Approx(n.breakdown[0] + n.breakdown[1]).epsilon(1e-15));

  CHECK_THROWS_AS(make_state(SystemTag::TwoCH, {u}, 2.0), std::invalid_argument);
}

TEST_CASE("rhs_ch: zero, constant, frozen cosine value") {
  const SystemState zero = make_state(SystemTag::CH, {SpectralField::zero(16)}, 2.0);
  CHECK(rhs_ch(zero).max_abs_coeff() == 0.0);

  const SystemState constant =
      make_state(SystemTag::CH, {synthesize({{0, Complex(0.7, 0.0)}}, 16)}, 2.0);
  CHECK(rhs_ch(constant).max_abs_coeff() < 1e-16);

  // F(cos x) = 0.6 sin 2x; sin 2x has coefficients -i/2 at k = 2.
  const SystemState cosx = make_state(SystemTag::CH, {cosine_field(1.0, 1, 16)}, 2.0);
  const SpectralField f = rhs_ch(cosx).components[0];
  CHECK(f.coeff(2).imag() == doctest::Approx(-0.3).epsilon(1e-13));
  CHECK(f.coeff(2).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f.coeff(1).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f.coeff(0).real() == doctest::Approx(0.0).epsilon(1e-15));

  // And the dense-convolution oracle agrees on random data.
  const SpectralField u = random_test_field(16, 314);
  const SystemState su = make_state(SystemTag::CH, {u}, 2.0);
  CHECK(max_coeff_distance(rhs_ch(su).components[0], oracle_rhs_ch(u)) < 1e-12);
  CHECK_THROWS_AS(rhs_ch(random_3ch_state(16, 1)), std::invalid_argument);
}

TEST_CASE("rhs_2ch: reduction to CH and frozen values") {
  const SpectralField u = random_test_field(16, 55);
  const SystemState with_zero_rho =
      make_state(SystemTag::TwoCH, {u, SpectralField::zero(16)}, 2.0);
  const SystemState two = rhs_2ch(with_zero_rho, 1);
  const SystemState ch = rhs_ch(make_state(SystemTag::CH, {u}, 2.0));
  CHECK(max_coeff_distance(two.components[0], ch.components[0]) < 1e-13);
  CHECK(two.components[1].max_abs_coeff() == 0.0);

  // u = cos x, rho = sin x, k = 1: F1 = 0.5 sin 2x, F2 = -cos 2x.
  const SystemState z = make_state(
      SystemTag::TwoCH, {cosine_field(1.0, 1, 16), sine_field(1.0, 1, 16)}, 2.0);
  const SystemState out = rhs_2ch(z, 1);
  CHECK(out.components[0].coeff(2).imag() == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK(out.components[1].coeff(2).real() == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(out.components[1].coeff(2).imag() == doctest::Approx(0.0).epsilon(1e-15));

  // k = -1 flips the rho^2 contribution of F1 and leaves F2 alone.
  const SystemState flipped = rhs_2ch(z, -1);
  CHECK(max_coeff_distance(flipped.components[1], out.components[1]) == 0.0);
  CHECK(max_coeff_distance(flipped.components[0], out.components[0]) > 1e-3);
}

TEST_CASE("rhs_2ch: F2 has exactly zero mean (conservation of the density)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SystemState z = make_state(
        SystemTag::TwoCH, {random_test_field(16, seed), random_test_field(16, 600 + seed)},
        2.0);
    CHECK(rhs_2ch(z, 1).components[1].coeff(0) == Complex(0.0, 0.0));
  }
}

TEST_CASE("rhs_m2ch: reduction, frozen values, zero state") {
  const SpectralField u = random_test_field(16, 77);
  const SystemState with_zero_gamma =
      make_state(SystemTag::M2CH, {u, SpectralField::zero(16)}, 2.0);
  const SystemState out = rhs_m2ch(with_zero_gamma, 1);
  const SystemState ch = rhs_ch(make_state(SystemTag::CH, {u}, 2.0));
  CHECK(max_coeff_distance(out.components[0], ch.components[0]) < 1e-14);
  CHECK(out.components[1].max_abs_coeff() == 0.0);

  // u = 0, gamma = cos x, k = 1: F_u = 0.2 sin 2x, F_gamma = 0.
  const SystemState g = make_state(
      SystemTag::M2CH, {SpectralField::zero(16), cosine_field(1.0, 1, 16)}, 2.0);
  const SystemState gout = rhs_m2ch(g, 1);
  CHECK(gout.components[0].coeff(2).imag() == doctest::Approx(-0.1).epsilon(1e-13));
  CHECK(gout.components[1].max_abs_coeff() < 1e-16);

  const SystemState zero =
      make_state(SystemTag::M2CH, {SpectralField::zero(16), SpectralField::zero(16)}, 2.0);
  CHECK(rhs_m2ch(zero, 1).max_abs_coeff() == 0.0);
}

TEST_CASE("b_field: antisymmetry, vanishing, oracle match") {
  const SpectralField u = random_test_field(16, 21);
  const SpectralField v = random_test_field(16, 22);
  const SpectralField w = random_test_field(16, 23);

  // B(u, u) = 0 exactly, so b = -2 P2 v.
  const SpectralField b_uu = b_field(u, u, v);
  const SpectralField expect = (-2.0) * apply_multiplier(v, MultiplierKind::P2);
  CHECK(max_coeff_distance(b_uu, expect) == 0.0);

  // v = 0, w = 0: every term carries w or v.
  CHECK(b_field(u, SpectralField::zero(16), SpectralField::zero(16)).max_abs_coeff() == 0.0);

  CHECK(max_coeff_distance(b_field(u, w, v), oracle_b_field(u, w, v)) < 1e-12);
}

TEST_CASE("rhs_3ch: zero state, single-component state, oracle match") {
  const SystemState zero = make_state(
      SystemTag::ThreeCH,
      {SpectralField::zero(16), SpectralField::zero(16), SpectralField::zero(16)}, 2.0);
  CHECK(rhs_3ch(zero).max_abs_coeff() == 0.0);

  // u = cos x, v = w = 0: every term carries v, w or B(u, 0) = 0.
  const SystemState only_u = make_state(
      SystemTag::ThreeCH,
      {cosine_field(1.0, 1, 16), SpectralField::zero(16), SpectralField::zero(16)}, 2.0);
  CHECK(rhs_3ch(only_u).max_abs_coeff() == 0.0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SystemState U = random_3ch_state(16, 3000 + 7 * seed);
    const SystemState fast = rhs_3ch(U);
    const SystemState oracle = oracle_rhs_3ch(U);
    for (int c = 0; c < 3; ++c) {
      CHECK(max_coeff_distance(fast.components[static_cast<std::size_t>(c)],
                               oracle.components[static_cast<std::size_t>(c)]) < 1e-12);
    }
  }
}

TEST_CASE("check_3ch_consistency: primitive form agrees") {
  const SystemState zero = make_state(
      SystemTag::ThreeCH,
      {SpectralField::zero(16), SpectralField::zero(16), SpectralField::zero(16)}, 2.0);
  CHECK(check_3ch_consistency(zero, rhs_3ch(zero)).lhs == 0.0);

  const SystemState single = make_state(
      SystemTag::ThreeCH,
      {cosine_field(0.3, 1, 16), sine_field(0.2, 1, 16), cosine_field(0.1, 2, 16)}, 2.0);
  const InequalityReport r1 = check_3ch_consistency(single, rhs_3ch(single));
  CHECK(r1.lhs < 1e-12);
  CHECK(r1.holds);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SystemState U = random_3ch_state(16, 9000 + seed);
    const InequalityReport r = check_3ch_consistency(U, rhs_3ch(U));
    CHECK(r.lhs < 1e-10);
  }
}

TEST_CASE("rhs outputs preserve realness") {
  const SystemState U = random_3ch_state(16, 1234);
  for (const auto& c : rhs_3ch(U).components) CHECK(c.is_hermitian());
  const SystemState z = make_state(
      SystemTag::TwoCH, {random_test_field(16, 1), random_test_field(16, 2)}, 2.0);
  for (const auto& c : rhs_2ch(z, 1).components) CHECK(c.is_hermitian());
}

TEST_CASE("lifespan_constants: frozen plug-in values") {
  // Scale the cosine so that ||u0||_1 = 1 exactly, with C_s = 1, sigma = 1.
  const SpectralField raw = cosine_field(1.0, 1, 16);
  const Real n_raw = gevrey_norm(raw, {1.0, 1.0, 2.0});
  const SystemState u0 = make_state(SystemTag::CH, {(1.0 / n_raw) * raw}, 2.0);
  const LifespanConstants ch = lifespan_constants(SystemTag::CH, u0, 1.0, 1.0);
  // Hand plug-in: T0 = 1 / (2^7 (e^{-1} + 2)).
  const Real t0_ch_expect = 1.0 / (128.0 * (std::exp(-1.0) + 2.0));
  CHECK(t0_ch_expect == doctest::Approx(3.29936561134e-3).epsilon(1e-11));
  CHECK(ch.T0 == doctest::Approx(t0_ch_expect).epsilon(1e-6));
  CHECK(ch.R == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ch.L == doctest::Approx(2.0 * (std::exp(-1.0) + 2.0)).epsilon(1e-12));

  // 3CH at unit norm: split the mass over three components.
  const SpectralField third = (1.0 / (3.0 * n_raw)) * raw;
  const SystemState U0 = make_state(SystemTag::ThreeCH, {third, third, third}, 2.0);
  const LifespanConstants thr = lifespan_constants(SystemTag::ThreeCH, U0, 1.0, 1.0);
  const Real c1 = 90.0 + 27.0 * std::exp(-1.0);
  const Real c2 = 14.0 + 6.0 * std::exp(-1.0);
  const Real t0_3ch_expect = 1.0 / (64.0 * (c1 + c2));
  CHECK(t0_3ch_expect == doctest::Approx(1.34535879969e-4).epsilon(1e-11));
  CHECK(thr.T0 == doctest::Approx(t0_3ch_expect).epsilon(1e-6));
}

TEST_CASE("lifespan_constants: scaling, consistency with the min formula, errors") {
  const SystemState u0 = make_state(SystemTag::CH, {cosine_field(0.1, 1, 16)}, 2.0);
  const SystemState u0_twice = make_state(SystemTag::CH, {cosine_field(0.2, 1, 16)}, 2.0);
  const LifespanConstants a = lifespan_constants(SystemTag::CH, u0, 1.0, 1.0);
  const LifespanConstants b = lifespan_constants(SystemTag::CH, u0_twice, 1.0, 1.0);
  CHECK(b.T0 == doctest::Approx(0.5 * a.T0).epsilon(1e-12));

  // The per-system formula and the generic min agree by construction.
  const LifespanConstants re = lifespan_T0(a.L, a.M, a.R, a.sigma);
  CHECK(re.T0 == doctest::Approx(a.T0).epsilon(1e-14));

  const SystemState zero = make_state(SystemTag::CH, {SpectralField::zero(16)}, 2.0);
  CHECK_THROWS_AS(lifespan_constants(SystemTag::CH, zero, 1.0, 1.0), std::domain_error);
}

TEST_CASE("lifespan_constants: 2CH formula collapses to the first branch") {
  const SystemState z0 = make_state(
      SystemTag::TwoCH, {cosine_field(0.2, 1, 16), sine_field(0.1, 1, 16)}, 2.0);
  const LifespanConstants c = lifespan_constants(SystemTag::TwoCH, z0, 1.3, 1.5);
  const Real n1 = state_norm(z0, 1.5, 1.0).value;
  const Real g = std::exp(-1.5) * std::pow(1.5, 1.5);
  CHECK(c.T0 == doctest::Approx(1.0 / (std::pow(2.0, 9.0) * 1.3 * (g + 1.0) * n1))
                    .epsilon(1e-12));
}

TEST_CASE("lifespan_constants: m2ch empirical estimate is positive and consistent") {
  const SystemState z0 = make_state(
      SystemTag::M2CH, {cosine_field(0.1, 1, 16), cosine_field(0.05, 2, 16)}, 2.0);
  M2chEstimateOptions opts;
  opts.samples = 10;
  const LifespanConstants c = lifespan_constants(SystemTag::M2CH, z0, 1.0, 1.0, opts);
  CHECK(c.T0 > 0.0);
  CHECK(c.L > 0.0);
  CHECK(c.M > 0.0);
  const LifespanConstants re = lifespan_T0(c.L, c.M, c.R, c.sigma);
  CHECK(re.T0 == doctest::Approx(c.T0).epsilon(1e-14));
}

TEST_CASE("peakon coefficients follow the 1/(1+k^2) law") {
  const SpectralField p = peakon_field(1.0, 0.0, 32);
  // u_hat(k) = (1/pi) / (1 + k^2) on the 2 pi torus.
  for (Index k : {0, 1, 3, 10}) {
    CHECK(p.coeff(k).real() ==
          doctest::Approx(1.0 / (M_PI * (1.0 + k * k))).epsilon(1e-14));
    CHECK(p.coeff(k).imag() == doctest::Approx(0.0).epsilon(1e-16));
  }
  // Centered peakon picks up the translation phase.
  const SpectralField shifted = peakon_field(1.0, 1.0, 32);
  CHECK(std::abs(shifted.coeff(1) -
                 p.coeff(1) * std::exp(Complex(0.0, -1.0))) < 1e-14);
}
