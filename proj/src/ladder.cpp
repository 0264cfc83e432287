#include "gevreych/ladder.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gevreych {

namespace {

constexpr Real kNaN = std::numeric_limits<Real>::quiet_NaN();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Real pow1s(Real x, Real inv_sigma) { return std::pow(x, inv_sigma); }

/// Adaptive Simpson on [a,b] with recursive bisection and absolute tolerance.
Real adaptive_simpson(const std::function<Real(Real)>& f, Real a, Real b, Real fa,
                      Real fm, Real fb, Real whole, Real tol, int depth, bool& converged) {
  const Real m = 0.5 * (a + b);
  const Real lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Real flm = f(lm), frm = f(rm);
  const Real left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Real right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Real delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * std::abs(b)) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    converged = false;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, converged) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, converged);
}

/// Relative-tolerance driver: a composite Simpson pass on `panels` panels
/// sets the scale, then the adaptive pass refines to tol_rel of it.
Real integrate_adaptive(const std::function<Real(Real)>& f, Real a, Real b, Real tol_rel,
                        int panels, bool& converged) {
  if (b <= a) return 0.0;
  Real rough = 0.0;
  const Real h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const Real x0 = a + i * h;
    rough += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
  }
  const Real tol_abs = tol_rel * std::max(std::abs(rough), 1e-30);
  const Real m = 0.5 * (a + b);
  const Real fa = f(a), fm = f(m), fb = f(b);
  const Real whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol_abs, 42, converged);
}

}  // namespace

Real LadderSpec::time_window(Real delta) const {
  return a * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
}

Real LadderSpec::max_sample_time() const {
  Real tmax = 0.0;
  for (Real d : delta_grid) {
    for (Real fr : t_fraction_grid) tmax = std::max(tmax, fr * time_window(d));
  }
  return tmax;
}

void LadderSpec::validate() const {
  require(a > 0.0, "LadderSpec: a must be > 0");
  require(sigma >= 1.0, "LadderSpec: sigma must be >= 1");
  require(!delta_grid.empty() && !t_fraction_grid.empty(), "LadderSpec: empty grid");
  Real prev = 0.0;
  for (Real d : delta_grid) {
    require(d > prev && d < 1.0, "LadderSpec: delta grid must increase inside (0,1)");
    prev = d;
  }
  prev = -1.0;
  for (Real fr : t_fraction_grid) {
    require(fr > prev && fr >= 0.0 && fr < 1.0,
            "LadderSpec: time fractions must increase inside [0,1)");
    prev = fr;
  }
}

LadderSpec LadderSpec::with_default_grids(Real a, Real sigma) {
  LadderSpec spec;
  spec.a = a;
  spec.sigma = sigma;
  const int nd = 32;
  const Real lo = 0.02, hi = 0.98;
  spec.delta_grid.resize(nd);
  for (int j = 0; j < nd; ++j) {
    // Chebyshev points of [lo, hi], reordered to increase.
    const Real c = std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * nd));
    spec.delta_grid[static_cast<std::size_t>(nd - 1 - j)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * c;
  }
  const int nt = 16;
  spec.t_fraction_grid.resize(nt);
  for (int j = 0; j < nt; ++j) {
    spec.t_fraction_grid[static_cast<std::size_t>(j)] = 0.95 * static_cast<Real>(j) / (nt - 1);
  }
  spec.validate();
  return spec;
}

Real delta_tau(Real delta, Real tau, Real a, Real sigma) {
  require(delta >= 0.0 && delta < 1.0, "delta_tau: delta must be in [0,1)");
  require(a > 0.0 && sigma >= 1.0, "delta_tau: need a > 0, sigma >= 1");
  const Real window = a * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
  if (!(tau >= 0.0) || !(tau < window)) {
    throw std::invalid_argument("delta_tau: tau outside the admissible window");
  }
  const Real inv_sigma = 1.0 / sigma;
  const Real base = std::pow(1.0 - delta, sigma);
  const Real lead = 0.5 * (1.0 + delta);
  const Real coef = std::pow(0.5, 2.0 + inv_sigma);
  const Real d = lead + coef * (pow1s(base - tau / a, inv_sigma) -
                                pow1s(base + (std::pow(2.0, sigma + 1.0) - 1.0) * tau / a, inv_sigma));
  if (!(d > delta) || !(d < 1.0)) {
    throw std::logic_error("delta_tau: value left (delta, 1)");
  }
  return d;
}

InequalityReport check_scale_inequality(Real delta, Real t, Real a, Real sigma) {
  require(delta >= 0.0 && delta < 1.0, "check_scale_inequality: delta in [0,1)");
  require(a > 0.0 && sigma >= 1.0, "check_scale_inequality: need a > 0, sigma >= 1");
  const Real window = a * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
  if (!(t >= 0.0) || !(t < window)) {
    throw std::invalid_argument("check_scale_inequality: t outside the admissible window");
  }
  const Real inv_sigma = 1.0 / sigma;
  const Real base = std::pow(1.0 - delta, sigma);
  const Real rhs_val = std::pow(0.5, 1.0 + inv_sigma) *
                       (pow1s(base - t / a, inv_sigma) +
                        pow1s(base + (std::pow(2.0, sigma + 1.0) - 1.0) * t / a, inv_sigma));
  // Strict inequality rhs_val < 1 - delta, reported as lhs <= rhs.
  InequalityReport r = make_report("scale_inequality", sigma, kNaN, delta, kNaN,
                                   rhs_val, 1.0 - delta);
  return r;
}

LadderIntegralReport check_ladder_integral(Real delta, Real t, Real a, Real sigma,
                                           int quadrature_points) {
  require(quadrature_points >= 4, "check_ladder_integral: too few quadrature points");
  require(delta >= 0.0 && delta < 1.0, "check_ladder_integral: delta in [0,1)");
  require(a > 0.0 && sigma >= 1.0, "check_ladder_integral: need a > 0, sigma >= 1");
  const Real window = a * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
  if (!(t >= 0.0) || !(t < window)) {
    throw std::invalid_argument("check_ladder_integral: t outside the admissible window");
  }

  const Real bound = a * std::pow(2.0, 2.0 * sigma + 3.0) / std::pow(1.0 - delta, sigma) *
                     std::sqrt(a * std::pow(1.0 - delta, sigma) /
                               (a * std::pow(1.0 - delta, sigma) - t));

  LadderIntegralReport out;
  if (t == 0.0) {
    out.report = make_report("ladder_integral", sigma, kNaN, delta, kNaN, 0.0, bound);
    out.quadrature_converged = true;
    return out;
  }

  const auto integrand = [&](Real tau) -> Real {
    const Real dt = delta_tau(delta, tau, a, sigma);
    const Real w = std::pow(dt - delta, sigma) * std::pow(1.0 - dt, sigma) *
                   std::sqrt(1.0 - tau / (a * std::pow(1.0 - dt, sigma)));
    return 1.0 / w;
  };

  // The integrand steepens toward tau = t when t sits near the window
  // boundary; the last 1% is integrated under tau = t (1 - s^2), which
  // flattens the square-root layer.
  const Real split = 0.99 * t;
  bool converged = true;
  const Real tol_rel = 1e-8;
  Real integral = integrate_adaptive(integrand, 0.0, split, tol_rel, quadrature_points, converged);
  const auto tail = [&](Real s) -> Real { return integrand(t * (1.0 - s * s)) * 2.0 * t * s; };
  integral += integrate_adaptive(tail, 0.0, std::sqrt(0.01), tol_rel, quadrature_points, converged);

  out.report = make_report("ladder_integral", sigma, kNaN, delta, kNaN, integral, bound);
  out.quadrature_error = tol_rel;
  out.quadrature_converged = converged;
  if (!converged) {
    throw std::runtime_error("check_ladder_integral: quadrature failed to converge");
  }
  return out;
}

LifespanConstants lifespan_T0(Real L, Real M, Real R, Real sigma) {
  require(L > 0.0, "lifespan_T0: L must be > 0");
  require(R > 0.0, "lifespan_T0: R must be > 0");
  require(M >= 0.0, "lifespan_T0: M must be >= 0");
  require(sigma >= 1.0, "lifespan_T0: sigma must be >= 1");
  LifespanConstants c;
  c.L = L;
  c.M = M;
  c.R = R;
  c.sigma = sigma;
  const Real p = std::pow(2.0, sigma) - 1.0;
  const Real first = 1.0 / (std::pow(2.0, 2.0 * sigma + 4.0) * L);
  const Real second = p * R / (p * std::pow(2.0, 2.0 * sigma + 3.0) * L * R + M);
  c.T0 = std::min(first, second);
  return c;
}

}  // namespace gevreych
