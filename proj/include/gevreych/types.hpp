#pragma once

#include <Eigen/Core>
#include <complex>

namespace gevreych {

using Index = Eigen::Index;
using Real = double;
using Complex = std::complex<double>;
using ArrayXr = Eigen::ArrayXd;
using ArrayXc = Eigen::ArrayXcd;

// Shared numerical policy. Inequality checks accept
//   lhs <= rhs * (1 + kIneqRelTol) + kIneqAbsTol
// so rounding cannot flip a true inequality while genuine violations still fail.
inline constexpr Real kIneqRelTol = 1e-10;
inline constexpr Real kIneqAbsTol = 1e-14;

// Largest exponent fed to std::exp inside weighted norms; beyond this the
// norm is reported as saturated instead of silently overflowing to Inf.
inline constexpr Real kExponentCap = 700.0;

// Fourier amplitudes below this level are indistinguishable from roundoff
// and are excluded from decay-rate fits.
inline constexpr Real kNoiseFloor = 1e-14;

inline bool inequality_holds(Real lhs, Real rhs) {
  return lhs <= rhs * (1.0 + kIneqRelTol) + kIneqAbsTol;
}

}  // namespace gevreych
