#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gevreych/spectral_field.hpp"
#include "oracles.hpp"

using namespace gevreych;
using namespace gevreych::testing;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("synthesize: constant, cosine, empty") {
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 8);
  const ArrayXr phys = to_physical(one);
  for (Index j = 0; j < phys.size(); ++j) CHECK(phys[j] == doctest::Approx(1.0).epsilon(1e-14));

  const SpectralField cosx = synthesize({{1, Complex(0.5, 0.0)}, {-1, Complex(0.5, 0.0)}}, 8);
  const ArrayXr grid = to_physical(cosx, 32);
  for (Index j = 0; j < 32; ++j) {
    const Real x = 2.0 * M_PI * j / 32.0;
    CHECK(grid[j] == doctest::Approx(std::cos(x)).epsilon(1e-13));
  }

  const SpectralField zero = synthesize({}, 8);
  CHECK(zero.max_abs_coeff() == 0.0);
}

TEST_CASE("synthesize: one-sided modes are mirrored") {
  const SpectralField f = synthesize({{2, Complex(0.25, 0.5)}}, 4);
  CHECK(f.coeff(-2) == std::conj(f.coeff(2)));
  CHECK(f.is_hermitian());
}

TEST_CASE("synthesize: errors") {
  CHECK_THROWS_AS(synthesize({{9, Complex(1.0, 0.0)}}, 8), std::invalid_argument);
  // +k and -k both given but not conjugate
  CHECK_THROWS_AS(synthesize({{1, Complex(0.0, 1.0)}, {-1, Complex(0.0, 1.0)}}, 8),
                  std::invalid_argument);
  // conflicting duplicate entries for one mode
  CHECK_THROWS_AS(synthesize({{1, Complex(1.0, 0.0)}, {1, Complex(2.0, 0.0)}}, 8),
                  std::invalid_argument);
}

TEST_CASE("apply_multiplier: frozen symbol values") {
  // P1 on 2cos2x: symbol at |k|=2 is 1/5.
  const SpectralField f2 = synthesize({{2, Complex(1.0, 0.0)}, {-2, Complex(1.0, 0.0)}}, 4);
  const SpectralField p1 = apply_multiplier(f2, MultiplierKind::P1);
  CHECK(p1.coeff(2).real() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(p1.coeff(2).imag() == 0.0);

  // P2 on the constant 1: symbol at k=0 is 1/4.
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 4);
  CHECK(apply_multiplier(one, MultiplierKind::P2).coeff(0).real() == doctest::Approx(0.25));

  // P3 on cos x is -sin x: coefficients (+-) i/2.
  const SpectralField cosx = synthesize({{1, Complex(0.5, 0.0)}, {-1, Complex(0.5, 0.0)}}, 4);
  const SpectralField d = apply_multiplier(cosx, MultiplierKind::P3);
  const SpectralField msinx = synthesize({{1, 0.5 * I}, {-1, -0.5 * I}}, 4);
  CHECK(max_coeff_distance(d, msinx) == 0.0);
}

TEST_CASE("apply_multiplier: composite tags equal sequential application bit-for-bit") {
  const SpectralField f = random_test_field(16, 77);
  const SpectralField p13 = apply_multiplier(f, MultiplierKind::P13);
  const SpectralField seq13 =
      apply_multiplier(apply_multiplier(f, MultiplierKind::P1), MultiplierKind::P3);
  const SpectralField p23 = apply_multiplier(f, MultiplierKind::P23);
  const SpectralField seq23 =
      apply_multiplier(apply_multiplier(f, MultiplierKind::P2), MultiplierKind::P3);
  for (Index k = -16; k <= 16; ++k) {
    CHECK(p13.coeff(k) == seq13.coeff(k));
    CHECK(p23.coeff(k) == seq23.coeff(k));
  }
}

TEST_CASE("multiplier symbols preserve realness") {
  for (auto kind : {MultiplierKind::P1, MultiplierKind::P2, MultiplierKind::P3,
                    MultiplierKind::P13, MultiplierKind::P23}) {
    for (Real kappa : {0.0, 1.0, 2.5, 7.0}) {
      CHECK(multiplier_symbol(kind, -kappa) == std::conj(multiplier_symbol(kind, kappa)));
    }
  }
}

TEST_CASE("product: identity and double-angle") {
  const SpectralField one = synthesize({{0, Complex(1.0, 0.0)}}, 16);
  const SpectralField g = random_test_field(16, 5);
  CHECK(max_coeff_distance(product(one, g), g) < 1e-14);

  const SpectralField cosx = synthesize({{1, Complex(0.5, 0.0)}, {-1, Complex(0.5, 0.0)}}, 16);
  const SpectralField sq = product(cosx, cosx);
  // cos^2 x = 1/2 + (1/2) cos 2x
  CHECK(sq.coeff(0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sq.coeff(2).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sq.coeff(1).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(sq.coeff(2).imag()) < 1e-16);
}

TEST_CASE("product equals the direct convolution oracle at K=16") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpectralField f = random_test_field(16, 1000 + seed);
    const SpectralField g = random_test_field(16, 2000 + seed);
    CHECK(max_coeff_distance(product(f, g), oracle_product(f, g)) < 1e-12);
  }
}

TEST_CASE("product: commutative and bilinear") {
  const SpectralField f = random_test_field(16, 31);
  const SpectralField g = random_test_field(16, 32);
  const SpectralField h = random_test_field(16, 33);
  CHECK(max_coeff_distance(product(f, g), product(g, f)) < 1e-12);
  const SpectralField lhs = product(f, g + 2.0 * h);
  const SpectralField rhs = product(f, g) + 2.0 * product(f, h);
  CHECK(max_coeff_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("product: mismatched resolutions rejected") {
  const SpectralField f = random_test_field(16, 1);
  const SpectralField g = random_test_field(8, 2);
  CHECK_THROWS_AS(product(f, g), std::invalid_argument);
}

TEST_CASE("round trip physical/spectral") {
  const SpectralField f = random_test_field(24, 9);
  const SpectralField back = to_spectral(to_physical(f), 24);
  CHECK(max_coeff_distance(f, back) < 1e-13);
}

TEST_CASE("outputs stay Hermitian bit-for-bit") {
  const SpectralField f = random_test_field(16, 11);
  const SpectralField g = random_test_field(16, 12);
  for (const SpectralField& field :
       {product(f, g), apply_multiplier(f, MultiplierKind::P13), f + g, f - g}) {
    CHECK(field.is_hermitian());
  }
}

TEST_CASE("csv and json round trips") {
  const SpectralField f = random_test_field(12, 21);
  std::stringstream ss;
  write_field_csv(ss, f);
  const SpectralField from_csv = read_field_csv(ss);
  CHECK(max_coeff_distance(f, from_csv) < 1e-15 * std::max(1.0, f.max_abs_coeff()));

  const SpectralField from_json = field_from_json(field_to_json(f));
  CHECK(from_json.n_modes() == f.n_modes());
  CHECK(from_json.period() == f.period());
  CHECK(max_coeff_distance(f, from_json) < 1e-15 * std::max(1.0, f.max_abs_coeff()));
}

TEST_CASE("general period rescales wavenumbers") {
  const Real period = 4.0 * M_PI;
  const SpectralField f = synthesize({{2, Complex(0.5, 0.0)}, {-2, Complex(0.5, 0.0)}}, 4, period);
  // kappa = 2 pi k / period = 1 at k = 2, so P1's symbol is 1/2.
  const SpectralField p1 = apply_multiplier(f, MultiplierKind::P1);
  CHECK(p1.coeff(2).real() == doctest::Approx(0.25).epsilon(1e-15));
}
