#include "fracdelta/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracdelta/error.hpp"

namespace fracdelta {
namespace {

using cd = std::complex<double>;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cd lanczos_log_gamma(cd z) {
  const cd w = z - 1.0;
  cd series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    series += kLanczos[k] / (w + static_cast<double>(k));
  }
  const cd t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t +
         std::log(series);
}

}  // namespace

bool near_gamma_pole(cd z, double tol) {
  if (std::abs(z.imag()) > tol || z.real() > tol) return false;
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

cd log_sin_pi(cd z) {
  using std::numbers::pi;
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), |e^{2 i pi z}| <= 1.
  const cd i(0.0, 1.0);
  const cd small = std::exp(2.0 * i * pi * z);
  return -i * pi * z + std::log((small - 1.0) / (2.0 * i));
}

cd log_gamma_complex(cd z) {
  if (near_gamma_pole(z, 1e-14)) {
    std::ostringstream msg;
    msg << "log-gamma pole at z = " << z;
    throw PoleError(msg.str());
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(std::numbers::pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

}  // namespace fracdelta
