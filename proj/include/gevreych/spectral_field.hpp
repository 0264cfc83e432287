#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gevreych/types.hpp"

namespace gevreych {

/// Truncated Fourier representation of a real periodic function:
///   f(x) = sum_{k=-K..K} coeff(k) * exp(i * kappa_k * x),  kappa_k = 2*pi*k/period.
/// Coefficients are stored densely over k = -K..K and kept Hermitian
/// (coeff(-k) == conj(coeff(k))), so the field is real-valued in physical space.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(Index n_modes, Real period);

  static SpectralField zero(Index n_modes, Real period = kDefaultPeriod);

  Index n_modes() const { return n_modes_; }
  Real period() const { return period_; }

  /// Rescaled wavenumber 2*pi*k/period (equal to k for the default period).
  Real wavenumber(Index k) const;

  Complex coeff(Index k) const { return coeffs_[static_cast<Index>(k + n_modes_)]; }
  void set_coeff(Index k, Complex value) { coeffs_[static_cast<Index>(k + n_modes_)] = value; }

  /// Dense storage, index i holds mode k = i - n_modes().
  const ArrayXc& coeffs() const { return coeffs_; }
  ArrayXc& coeffs() { return coeffs_; }

  Real max_abs_coeff() const;
  bool is_hermitian() const;
  bool all_finite() const;

  /// Enforces coeff(-k) = conj(coeff(k)) exactly (and a real mean mode) by
  /// averaging the two half-spectra.
  void symmetrize();

  static constexpr Real kDefaultPeriod = 6.283185307179586476925287;  // 2*pi

 private:
  Index n_modes_ = 0;
  Real period_ = kDefaultPeriod;
  ArrayXc coeffs_;  // length 2*n_modes+1
};

/// Diagonal Fourier multipliers used by the Camassa-Holm right-hand sides:
/// P1 = (1-dxx)^-1, P2 = (4-dxx)^-1, P3 = dx, P13 = P1*P3, P23 = P2*P3.
enum class MultiplierKind { P1, P2, P3, P13, P23 };

/// Symbol of the multiplier at rescaled wavenumber kappa. For the composite
/// tags this is the product of the component symbols; apply_multiplier applies
/// the components sequentially so compositions are reproduced bit-for-bit.
Complex multiplier_symbol(MultiplierKind kind, Real kappa);

const char* multiplier_name(MultiplierKind kind);

/// Builds a field from explicit (wavenumber, amplitude) pairs; modes not
/// listed are zero. A mode given only for +k (or only -k) is mirrored to its
/// conjugate; if both signs are supplied they must be conjugate-consistent.
/// Throws std::invalid_argument on |k| > n_modes or inconsistent pairs.
SpectralField synthesize(const std::vector<std::pair<Index, Complex>>& modes,
                         Index n_modes, Real period = SpectralField::kDefaultPeriod);

SpectralField apply_multiplier(const SpectralField& f, MultiplierKind kind);

/// Pointwise product computed by zero-padded FFT multiplication (padding
/// past 3K so the truncated convolution is alias-free), truncated back to
/// n_modes and re-symmetrized. Throws on mismatched resolution or period.
SpectralField product(const SpectralField& f, const SpectralField& g);

/// Samples the field on a uniform grid of n_points (default 2K+2, the
/// minimum for exact quadrature of the retained modes).
ArrayXr to_physical(const SpectralField& f, Index n_points = 0);

/// Fourier coefficients of uniformly sampled data; exact for band-limited
/// input when samples.size() >= 2*n_modes+1.
SpectralField to_spectral(const ArrayXr& samples, Index n_modes,
                          Real period = SpectralField::kDefaultPeriod);

// Linear-space arithmetic on matching resolutions.
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(Real scale, const SpectralField& f);
SpectralField& operator+=(SpectralField& a, const SpectralField& b);

// Serialization. CSV rows are "k,re,im"; the JSON envelope is
// {"n_modes":K, "period":p, "coeffs":[[re,im],...]}. Values round-trip
// within 1e-15 relative.
void write_field_csv(std::ostream& out, const SpectralField& f);
SpectralField read_field_csv(std::istream& in, Real period = SpectralField::kDefaultPeriod);
std::string field_to_json(const SpectralField& f);
SpectralField field_from_json(const std::string& text);

}  // namespace gevreych
