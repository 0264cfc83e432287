#include "gevreych/spectral_field.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gevreych {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Index next_pow2(Index n) {
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

SpectralField::SpectralField(Index n_modes, Real period)
    : n_modes_(n_modes), period_(period), coeffs_(ArrayXc::Zero(2 * n_modes + 1)) {
  require(n_modes >= 0, "n_modes must be nonnegative");
  require(period > 0.0, "period must be positive");
}

SpectralField SpectralField::zero(Index n_modes, Real period) {
  return SpectralField(n_modes, period);
}

Real SpectralField::wavenumber(Index k) const {
  return 2.0 * M_PI * static_cast<Real>(k) / period_;
}

Real SpectralField::max_abs_coeff() const {
  return coeffs_.size() == 0 ? 0.0 : coeffs_.abs().maxCoeff();
}

bool SpectralField::is_hermitian() const {
  for (Index k = 0; k <= n_modes_; ++k) {
    if (coeff(-k) != std::conj(coeff(k))) return false;
  }
  return true;
}

bool SpectralField::all_finite() const {
  for (Index i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i].real()) || !std::isfinite(coeffs_[i].imag())) return false;
  }
  return true;
}

void SpectralField::symmetrize() {
  set_coeff(0, Complex(coeff(0).real(), 0.0));
  for (Index k = 1; k <= n_modes_; ++k) {
    const Complex a = coeff(k);
    const Complex b = coeff(-k);
    const Complex avg(0.5 * (a.real() + b.real()), 0.5 * (a.imag() - b.imag()));
    set_coeff(k, avg);
    set_coeff(-k, std::conj(avg));
  }
}

Complex multiplier_symbol(MultiplierKind kind, Real kappa) {
  switch (kind) {
    case MultiplierKind::P1:
      return Complex(1.0 / (1.0 + kappa * kappa), 0.0);
    case MultiplierKind::P2:
      return Complex(1.0 / (4.0 + kappa * kappa), 0.0);
    case MultiplierKind::P3:
      return Complex(0.0, kappa);
    case MultiplierKind::P13:
      return multiplier_symbol(MultiplierKind::P1, kappa) *
             multiplier_symbol(MultiplierKind::P3, kappa);
    case MultiplierKind::P23:
      return multiplier_symbol(MultiplierKind::P2, kappa) *
             multiplier_symbol(MultiplierKind::P3, kappa);
  }
  throw std::logic_error("unknown multiplier kind");
}

const char* multiplier_name(MultiplierKind kind) {
  switch (kind) {
    case MultiplierKind::P1: return "P1";
    case MultiplierKind::P2: return "P2";
    case MultiplierKind::P3: return "P3";
    case MultiplierKind::P13: return "P13";
    case MultiplierKind::P23: return "P23";
  }
  return "?";
}

SpectralField synthesize(const std::vector<std::pair<Index, Complex>>& modes,
                         Index n_modes, Real period) {
  SpectralField f(n_modes, period);
  std::vector<bool> given(static_cast<std::size_t>(2 * n_modes + 1), false);
  for (const auto& [k, amp] : modes) {
    require(k >= -n_modes && k <= n_modes, "synthesize: wavenumber out of range");
    const auto idx = static_cast<std::size_t>(k + n_modes);
    if (given[idx] && f.coeff(k) != amp) {
      throw std::invalid_argument("synthesize: conflicting amplitudes for one mode");
    }
    f.set_coeff(k, amp);
    given[idx] = true;
  }
  // Mirror one-sided modes; reject conjugate-inconsistent pairs.
  for (Index k = 1; k <= n_modes; ++k) {
    const auto ip = static_cast<std::size_t>(k + n_modes);
    const auto im = static_cast<std::size_t>(-k + n_modes);
    if (given[ip] && !given[im]) {
      f.set_coeff(-k, std::conj(f.coeff(k)));
    } else if (given[im] && !given[ip]) {
      f.set_coeff(k, std::conj(f.coeff(-k)));
    } else if (given[ip] && given[im] && f.coeff(-k) != std::conj(f.coeff(k))) {
      throw std::invalid_argument("synthesize: +k/-k amplitudes violate conjugate symmetry");
    }
  }
  if (std::abs(f.coeff(0).imag()) > 0.0) {
    throw std::invalid_argument("synthesize: mean mode must be real");
  }
  return f;
}

SpectralField apply_multiplier(const SpectralField& f, MultiplierKind kind) {
  // Composite tags apply their parts in sequence so that P13 == P3 after P1
  // holds bit-for-bit (complex rounding makes fused symbols differ).
  if (kind == MultiplierKind::P13) {
    return apply_multiplier(apply_multiplier(f, MultiplierKind::P1), MultiplierKind::P3);
  }
  if (kind == MultiplierKind::P23) {
    return apply_multiplier(apply_multiplier(f, MultiplierKind::P2), MultiplierKind::P3);
  }
  SpectralField out = f;
  for (Index k = -f.n_modes(); k <= f.n_modes(); ++k) {
    out.set_coeff(k, f.coeff(k) * multiplier_symbol(kind, f.wavenumber(k)));
  }
  out.symmetrize();
  return out;
}

SpectralField product(const SpectralField& f, const SpectralField& g) {
  require(f.n_modes() == g.n_modes(), "product: mismatched resolutions");
  require(f.period() == g.period(), "product: mismatched periods");
  const Index K = f.n_modes();
  // Anything past 3K keeps the quadratic aliases out of the retained band,
  // so the result equals the exact truncated convolution up to roundoff.
  const Index n = next_pow2(3 * K + 1);

  Eigen::FFT<Real> fft;
  std::vector<Complex> fa(static_cast<std::size_t>(n), Complex(0, 0));
  std::vector<Complex> ga(static_cast<std::size_t>(n), Complex(0, 0));
  auto place = [n](std::vector<Complex>& dst, const SpectralField& src) {
    for (Index k = -src.n_modes(); k <= src.n_modes(); ++k) {
      const Index slot = k >= 0 ? k : n + k;
      dst[static_cast<std::size_t>(slot)] = src.coeff(k);
    }
  };
  place(fa, f);
  place(ga, g);

  std::vector<Complex> fp(static_cast<std::size_t>(n)), gp(static_cast<std::size_t>(n));
  fft.inv(fp, fa);  // inv applies 1/n; synthesis needs plain sums, rescale below
  fft.inv(gp, ga);
  for (std::size_t j = 0; j < fp.size(); ++j) {
    fp[j] = (fp[j] * static_cast<Real>(n)) * (gp[j] * static_cast<Real>(n));
  }
  std::vector<Complex> prod_hat(static_cast<std::size_t>(n));
  fft.fwd(prod_hat, fp);

  SpectralField out(K, f.period());
  const Real scale = 1.0 / static_cast<Real>(n);
  for (Index k = -K; k <= K; ++k) {
    const Index slot = k >= 0 ? k : n + k;
    out.set_coeff(k, prod_hat[static_cast<std::size_t>(slot)] * scale);
  }
  out.symmetrize();
  return out;
}

ArrayXr to_physical(const SpectralField& f, Index n_points) {
  const Index K = f.n_modes();
  Index n = n_points > 0 ? n_points : 2 * K + 2;
  require(n >= 2 * K + 1, "to_physical: grid too coarse for the retained modes");

  Eigen::FFT<Real> fft;
  std::vector<Complex> spec(static_cast<std::size_t>(n), Complex(0, 0));
  for (Index k = -K; k <= K; ++k) {
    const Index slot = k >= 0 ? k : n + k;
    spec[static_cast<std::size_t>(slot)] = f.coeff(k);
  }
  std::vector<Complex> phys(static_cast<std::size_t>(n));
  fft.inv(phys, spec);
  ArrayXr out(n);
  for (Index j = 0; j < n; ++j) out[j] = phys[static_cast<std::size_t>(j)].real() * static_cast<Real>(n);
  return out;
}

SpectralField to_spectral(const ArrayXr& samples, Index n_modes, Real period) {
  const Index n = samples.size();
  require(n >= 2 * n_modes + 1, "to_spectral: need at least 2K+1 samples");
  Eigen::FFT<Real> fft;
  std::vector<Complex> phys(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) phys[static_cast<std::size_t>(j)] = Complex(samples[j], 0.0);
  std::vector<Complex> spec(static_cast<std::size_t>(n));
  fft.fwd(spec, phys);
  SpectralField out(n_modes, period);
  const Real scale = 1.0 / static_cast<Real>(n);
  for (Index k = -n_modes; k <= n_modes; ++k) {
    const Index slot = k >= 0 ? k : n + k;
    out.set_coeff(k, spec[static_cast<std::size_t>(slot)] * scale);
  }
  out.symmetrize();
  return out;
}

namespace {

void check_same_shape(const SpectralField& a, const SpectralField& b) {
  require(a.n_modes() == b.n_modes() && a.period() == b.period(),
          "field arithmetic: mismatched resolutions");
}

}  // namespace

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  SpectralField out = a;
  out.coeffs() += b.coeffs();
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  SpectralField out = a;
  out.coeffs() -= b.coeffs();
  return out;
}

SpectralField operator*(Real scale, const SpectralField& f) {
  SpectralField out = f;
  out.coeffs() *= scale;
  return out;
}

SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  a.coeffs() += b.coeffs();
  return a;
}

void write_field_csv(std::ostream& out, const SpectralField& f) {
  char buf[96];
  out << "k,re,im\n";
  for (Index k = -f.n_modes(); k <= f.n_modes(); ++k) {
    const Complex c = f.coeff(k);
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n",
                  static_cast<long long>(k), c.real(), c.imag());
    out << buf;
  }
}

SpectralField read_field_csv(std::istream& in, Real period) {
  std::string line;
  std::vector<std::pair<Index, Complex>> modes;
  Index max_k = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    std::istringstream row(line);
    long long k;
    Real re, im;
    char comma;
    if (!(row >> k >> comma >> re >> comma >> im)) {
      throw std::invalid_argument("field csv: malformed row: " + line);
    }
    modes.emplace_back(static_cast<Index>(k), Complex(re, im));
    max_k = std::max(max_k, static_cast<Index>(std::llabs(k)));
  }
  return synthesize(modes, max_k, period);
}

std::string field_to_json(const SpectralField& f) {
  nlohmann::json j;
  j["n_modes"] = f.n_modes();
  j["period"] = f.period();
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (Index k = -f.n_modes(); k <= f.n_modes(); ++k) {
    arr.push_back({f.coeff(k).real(), f.coeff(k).imag()});
  }
  return j.dump();
}

SpectralField field_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const Index K = j.at("n_modes").get<Index>();
  const Real period = j.at("period").get<Real>();
  const auto& arr = j.at("coeffs");
  if (static_cast<Index>(arr.size()) != 2 * K + 1) {
    throw std::invalid_argument("field json: coeffs length must be 2K+1");
  }
  SpectralField f(K, period);
  for (Index i = 0; i < 2 * K + 1; ++i) {
    f.coeffs()[i] = Complex(arr[static_cast<std::size_t>(i)][0].get<Real>(),
                            arr[static_cast<std::size_t>(i)][1].get<Real>());
  }
  if (!f.is_hermitian()) f.symmetrize();
  return f;
}

}  // namespace gevreych
