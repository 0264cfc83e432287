#include "gevreych/radius.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gevreych {

namespace {

constexpr Real kNaN = std::numeric_limits<Real>::quiet_NaN();

struct ComponentFit {
  Real delta_hat = kNaN;
  Real residual = kNaN;
  bool resolution_limited = false;
  bool below_noise_floor = false;
};

/// Largest decay rate distinguishable from a zero tail at this resolution:
/// a steeper profile would put every mode past the fit range below the floor.
Real resolution_cap(Real max_amp, Real kappa_top, Real sigma) {
  return std::log(max_amp / kNoiseFloor) / std::pow(kappa_top, 1.0 / sigma);
}

ComponentFit fit_component(const SpectralField& f, Real sigma, Index k_min, Index k_max) {
  ComponentFit out;
  const Real max_amp = f.max_abs_coeff();
  if (max_amp <= kNoiseFloor) {
    out.below_noise_floor = true;
    return out;
  }
  const Real kappa_top = f.wavenumber(k_max);
  out.resolution_limited = std::abs(f.coeff(k_max)) < kNoiseFloor;
  int usable = 0;
  for (Index k = k_min; k <= k_max; ++k) {
    if (std::abs(f.coeff(k)) > kNoiseFloor) ++usable;
  }
  if (usable < 4) {
    out.delta_hat = resolution_cap(max_amp, kappa_top, sigma);
    out.resolution_limited = true;
    return out;
  }
  const FitResult fit = fit_radius(f, sigma, k_min, k_max);
  out.delta_hat = fit.delta_hat;
  out.residual = fit.residual;
  return out;
}

/// State-level radius: the smallest defined component radius (a state is
/// only as analytic as its worst component).
ComponentFit fit_state(const SystemState& state, Real sigma, Index k_min, Index k_max) {
  ComponentFit best;
  bool all_below = true;
  for (const auto& c : state.components) {
    const ComponentFit cf = fit_component(c, sigma, k_min, k_max);
    if (cf.below_noise_floor) continue;
    all_below = false;
    if (std::isnan(best.delta_hat) || cf.delta_hat < best.delta_hat) {
      best.delta_hat = cf.delta_hat;
      best.residual = cf.residual;
    }
    best.resolution_limited = best.resolution_limited || cf.resolution_limited;
  }
  best.below_noise_floor = all_below;
  return best;
}

}  // namespace

FitResult fit_radius(const SpectralField& f, Real sigma, Index k_min, Index k_max) {
  if (k_min < 1 || k_max > f.n_modes() || k_min >= k_max) {
    throw std::invalid_argument("fit_radius: bad fit range");
  }
  std::vector<Index> modes;
  for (Index k = k_min; k <= k_max; ++k) {
    if (std::abs(f.coeff(k)) > kNoiseFloor) modes.push_back(k);
  }
  if (modes.size() < 4) {
    throw std::runtime_error("fit_radius: fewer than 4 usable modes above the noise floor");
  }
  const auto n = static_cast<Index>(modes.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd y(n);
  for (Index i = 0; i < n; ++i) {
    const Index k = modes[static_cast<std::size_t>(i)];
    const Real kappa = f.wavenumber(k);
    A(i, 0) = -std::pow(kappa, 1.0 / sigma);
    A(i, 1) = std::log(static_cast<Real>(k));
    A(i, 2) = 1.0;
    y(i) = std::log(std::abs(f.coeff(k)));
  }
  const Eigen::Vector3d beta = A.colPivHouseholderQr().solve(y);
  FitResult out;
  out.delta_hat = std::max(0.0, beta(0));
  out.slope = beta(1);
  out.residual = std::sqrt((A * beta - y).squaredNorm() / static_cast<Real>(n));
  out.usable_modes = static_cast<int>(n);
  return out;
}

Real radius_floor(Real t, Real T0, Real sigma, Real delta_init) {
  if (t < 0.0) throw std::invalid_argument("radius_floor: negative time");
  if (!(T0 > 0.0)) throw std::invalid_argument("radius_floor: T0 must be > 0");
  const Real x = (std::pow(2.0, sigma) - 1.0) * t / T0;
  if (x >= 1.0) return 0.0;
  return delta_init * (1.0 - std::pow(x, 1.0 / sigma));
}

RadiusSeries track_radius(const SystemState& state0, Real sigma, const TrackOptions& opts) {
  state0.validate();
  RadiusSeries series;
  series.sigma_assumed = sigma;
  const Index k_max = opts.fit_k_max > 0 ? opts.fit_k_max : state0.n_modes();

  const ComponentFit anchor = fit_state(state0, sigma, opts.fit_k_min, k_max);
  if (anchor.below_noise_floor) {
    // Nothing measurable (e.g. zero data): report one undefined sample.
    RadiusSample s;
    s.delta_hat = kNaN;
    s.fit_residual = kNaN;
    s.below_noise_floor = true;
    series.samples.push_back(s);
    return series;
  }
  series.any_fit_defined = true;

  const LifespanConstants consts = lifespan_constants(state0.tag, state0, opts.C_s, sigma);
  series.T0 = consts.T0;
  series.certified_window = consts.T0 / (std::pow(2.0, sigma) - 1.0);
  const Real t_end = opts.t_end > 0.0 ? opts.t_end : series.certified_window;

  IntegrateOptions iopts;
  iopts.k_sign = opts.k_sign;
  iopts.store_every = opts.store_every;
  const IntegrationResult run = integrate(state0, opts.dt, t_end, iopts);

  for (std::size_t i = 0; i < run.trajectory.times.size(); ++i) {
    const Real t = run.trajectory.times[i];
    const ComponentFit cf = fit_state(run.trajectory.states[i], sigma, opts.fit_k_min, k_max);
    RadiusSample s;
    s.t = t;
    s.delta_hat = cf.below_noise_floor ? kNaN : cf.delta_hat;
    s.fit_residual = cf.residual;
    s.resolution_limited = cf.resolution_limited;
    s.below_noise_floor = cf.below_noise_floor;
    s.delta_floor = radius_floor(t, consts.T0, sigma, anchor.delta_hat);
    if (!cf.below_noise_floor && t <= series.certified_window &&
        s.delta_hat < s.delta_floor - opts.floor_tolerance) {
      series.floor_satisfied = false;
    }
    series.samples.push_back(s);
  }
  return series;
}

}  // namespace gevreych
