#include "gevreych/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevreych/rng.hpp"

namespace gevreych {

namespace {

constexpr Real kNaN = std::numeric_limits<Real>::quiet_NaN();

Real weight_exponent(Real delta, Real kappa, Real sigma) {
  return 2.0 * delta * std::pow(std::abs(kappa), 1.0 / sigma);
}

}  // namespace

void GevreyParams::validate() const {
  if (!(sigma >= 1.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("GevreyParams: sigma must be finite and >= 1");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("GevreyParams: delta must be finite and > 0");
  }
  if (!std::isfinite(s)) throw std::invalid_argument("GevreyParams: s must be finite");
}

NormValue gevrey_norm_checked(const SpectralField& f, const GevreyParams& p) {
  p.validate();
  NormValue out;
  Real sum = 0.0;
  for (Index k = -f.n_modes(); k <= f.n_modes(); ++k) {
    const Real amp2 = std::norm(f.coeff(k));
    if (amp2 == 0.0) continue;
    const Real kappa = f.wavenumber(k);
    Real expo = weight_exponent(p.delta, kappa, p.sigma);
    if (expo > kExponentCap) {
      out.saturated = true;
      expo = kExponentCap;
    }
    sum += std::pow(1.0 + kappa * kappa, p.s) * std::exp(expo) * amp2;
  }
  out.value = std::sqrt(sum);
  return out;
}

Real gevrey_norm(const SpectralField& f, const GevreyParams& p) {
  const NormValue nv = gevrey_norm_checked(f, p);
  if (nv.saturated) {
    throw std::overflow_error("gevrey_norm: exponent cap exceeded (norm saturated)");
  }
  return nv.value;
}

InequalityReport make_report(std::string check, Real sigma, Real s, Real delta,
                             Real delta_prime, Real lhs, Real rhs) {
  InequalityReport r;
  r.check = std::move(check);
  r.sigma = sigma;
  r.s = s;
  r.delta = delta;
  r.delta_prime = delta_prime;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.holds = inequality_holds(lhs, rhs);
  return r;
}

InequalityReport check_embedding(const SpectralField& f, const GevreyParams& p,
                                 const GevreyParams& p_weaker) {
  p.validate();
  p_weaker.validate();
  const bool lower_delta = p_weaker.delta < p.delta && p_weaker.sigma == p.sigma && p_weaker.s == p.s;
  const bool lower_s = p_weaker.s < p.s && p_weaker.sigma == p.sigma && p_weaker.delta == p.delta;
  const bool raise_sigma = p_weaker.sigma > p.sigma && p_weaker.delta == p.delta && p_weaker.s == p.s;
  if (!lower_delta && !lower_s && !raise_sigma) {
    throw std::invalid_argument(
        "check_embedding: weaker space must lower exactly one of delta, s, or raise sigma");
  }
  const Real lhs = gevrey_norm(f, p_weaker);
  const Real rhs = gevrey_norm(f, p);
  const char* name = lower_delta ? "embedding_delta" : (lower_s ? "embedding_s" : "embedding_sigma");
  return make_report(name, p.sigma, p.s, p.delta,
                     lower_delta ? p_weaker.delta : kNaN, lhs, rhs);
}

InequalityReport check_derivative_estimate(const SpectralField& f, Real sigma, Real s,
                                           Real delta, Real delta_prime) {
  if (!(delta_prime > 0.0) || !(delta_prime < delta)) {
    throw std::invalid_argument("check_derivative_estimate: need 0 < delta' < delta");
  }
  const GevreyParams strong{sigma, delta, s};
  const GevreyParams weak{sigma, delta_prime, s};
  const Real lhs = gevrey_norm(apply_multiplier(f, MultiplierKind::P3), weak);
  const Real factor =
      std::exp(-sigma) * std::pow(sigma, sigma) / std::pow(delta - delta_prime, sigma);
  const Real rhs = factor * gevrey_norm(f, strong);
  return make_report("derivative_estimate", sigma, s, delta, delta_prime, lhs, rhs);
}

GridSearchResult grid_search_g(Real sigma) {
  const auto g = [sigma](Real z) { return std::exp(-2.0 * z) * std::pow(z, 2.0 * sigma); };
  // Coarse pass over [0, 20 sigma], then golden-section refinement of the
  // bracketing interval down to ~1e-12 in z.
  const Real hi = 20.0 * sigma;
  const int n = 20000;
  Real best_z = 0.0, best_g = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Real z = hi * static_cast<Real>(i) / n;
    const Real v = g(z);
    if (v > best_g) {
      best_g = v;
      best_z = z;
    }
  }
  Real a = std::max(0.0, best_z - hi / n);
  Real b = std::min(hi, best_z + hi / n);
  const Real gr = 0.5 * (std::sqrt(5.0) - 1.0);
  Real c = b - gr * (b - a), d = a + gr * (b - a);
  Real gc = g(c), gd = g(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * sigma; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - gr * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + gr * (b - a);
      gd = g(d);
    }
  }
  const Real z_star = 0.5 * (a + b);
  return {g(z_star), z_star};
}

Real sup_g_factor(Real sigma) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("sup_g_factor: sigma must be >= 1");
  const Real closed = std::exp(-2.0 * sigma) * std::pow(sigma, 2.0 * sigma);
  const GridSearchResult grid = grid_search_g(sigma);
  if (std::abs(grid.max_value - closed) > 1e-8) {
    throw std::logic_error("sup_g_factor: grid search disagrees with closed form");
  }
  return closed;
}

SpectralField random_gevrey_field(const GevreyParams& p, Real surplus_decay,
                                  Index n_modes, std::uint64_t seed, Real period) {
  p.validate();
  if (!(surplus_decay > 0.0)) {
    throw std::invalid_argument("random_gevrey_field: surplus_decay must be > 0");
  }
  Rng rng(seed);
  SpectralField f(n_modes, period);
  const Real rate = p.delta + surplus_decay;
  for (Index k = 0; k <= n_modes; ++k) {
    const Real kappa = f.wavenumber(k);
    const Real amp = rng.uniform() *
                     std::exp(-rate * std::pow(std::abs(kappa), 1.0 / p.sigma)) *
                     std::pow(1.0 + kappa * kappa, -p.s / 2.0 - 1.0);
    const Real phase = rng.uniform(0.0, 2.0 * M_PI);
    if (k == 0) {
      f.set_coeff(0, Complex(amp * std::cos(phase), 0.0));
    } else {
      const Complex c = amp * Complex(std::cos(phase), std::sin(phase));
      f.set_coeff(k, c);
      f.set_coeff(-k, std::conj(c));
    }
  }
  return f;
}

Real product_norm_ratio(const SpectralField& f, const SpectralField& g,
                        const GevreyParams& p) {
  const Real den = gevrey_norm(f, p) * gevrey_norm(g, p);
  if (den == 0.0) throw std::invalid_argument("product_norm_ratio: zero factor norm");
  return gevrey_norm(product(f, g), p) / den;
}

ProductConstantEstimate check_product_estimates(Real sigma, Real s, Real delta,
                                                int samples, std::uint64_t seed,
                                                Index n_modes) {
  if (!(s > 0.5)) {
    throw std::invalid_argument("check_product_estimates: requires s > 1/2");
  }
  if (samples < 1) throw std::invalid_argument("check_product_estimates: samples >= 1");
  const GevreyParams ps{sigma, delta, s};
  const GevreyParams ps1{sigma, delta, s - 1.0};

  ProductConstantEstimate est;
  est.sigma = sigma;
  est.s = s;
  est.delta = delta;
  est.n_modes = n_modes;
  est.samples = samples;
  est.seed = seed;

  for (int i = 0; i < samples; ++i) {
    const SpectralField f = random_gevrey_field(ps, 0.5, n_modes, split_seed(seed, 2 * i));
    const SpectralField g = random_gevrey_field(ps, 0.5, n_modes, split_seed(seed, 2 * i + 1));
    const SpectralField fg = product(f, g);
    const Real nf_s = gevrey_norm(f, ps);
    const Real ng_s = gevrey_norm(g, ps);
    const Real nf_s1 = gevrey_norm(f, ps1);
    if (nf_s == 0.0 || ng_s == 0.0 || nf_s1 == 0.0) continue;
    est.C_s_hat = std::max(est.C_s_hat, gevrey_norm(fg, ps) / (nf_s * ng_s));
    est.Cbar_s_hat = std::max(est.Cbar_s_hat, gevrey_norm(fg, ps1) / (nf_s1 * ng_s));
  }
  return est;
}

std::vector<InequalityReport> check_multiplier_bounds(const SpectralField& f,
                                                      const GevreyParams& p,
                                                      const MultiplierBoundOptions& opts) {
  p.validate();
  const GevreyParams pm1{p.sigma, p.delta, p.s - 1.0};
  const GevreyParams pm2{p.sigma, p.delta, p.s - 2.0};
  const Real norm_s = gevrey_norm(f, p);

  SpectralField p2f = apply_multiplier(f, MultiplierKind::P2);
  if (opts.p2_symbol_scale != 1.0) p2f = opts.p2_symbol_scale * p2f;

  const Real p1_norm = gevrey_norm(apply_multiplier(f, MultiplierKind::P1), p);
  const Real p13_norm = gevrey_norm(apply_multiplier(f, MultiplierKind::P13), p);

  std::vector<InequalityReport> reports;
  // ||P1 f||_s = ||f||_{s-2}: checked as a two-sided bound.
  {
    const Real rhs = gevrey_norm(f, pm2);
    InequalityReport r = make_report("P1_norm_identity", p.sigma, p.s, p.delta, kNaN,
                                     std::abs(p1_norm - rhs), 1e-12 * std::max(1.0, rhs));
    reports.push_back(std::move(r));
  }
  reports.push_back(make_report("P1_bound", p.sigma, p.s, p.delta, kNaN, p1_norm, norm_s));
  reports.push_back(make_report("P2_bound", p.sigma, p.s, p.delta, kNaN,
                                gevrey_norm(p2f, p), 0.25 * norm_s));
  reports.push_back(make_report("P13_smoothing", p.sigma, p.s, p.delta, kNaN, p13_norm,
                                gevrey_norm(f, pm1)));
  reports.push_back(make_report("P13_bound", p.sigma, p.s, p.delta, kNaN, p13_norm,
                                0.5 * norm_s));
  reports.push_back(make_report("P23_bound", p.sigma, p.s, p.delta, kNaN,
                                gevrey_norm(apply_multiplier(f, MultiplierKind::P23), p),
                                0.25 * norm_s));
  return reports;
}

}  // namespace gevreych
