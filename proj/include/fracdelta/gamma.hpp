#pragma once

#include <complex>

namespace fracdelta {

/// log Gamma(z) for complex z. Lanczos (g = 7, 9 terms) for Re z >= 1/2,
/// reflection below. exp() of the result is Gamma(z); the real part is
/// log|Gamma(z)|. For Re z >= 1/2 the imaginary part is the continuous
/// branch that vanishes on the positive real axis.
/// Throws PoleError at non-positive integers.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// log(sin(pi z)), stable for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z);

/// True if z lies within `tol` of 0, -1, -2, ...
bool near_gamma_pole(std::complex<double> z, double tol);

}  // namespace fracdelta
