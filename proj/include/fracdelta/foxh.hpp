#pragma once

// Fox H-functions as inverse Mellin transforms, evaluated by quadrature on a
// vertical contour, and the real-space kernel
//   F_alpha(x) = int_R e^{ipx} / (|p|^alpha + |E|) dp
// together with its derivative.

#include <complex>
#include <vector>

#include "fracdelta/gamma.hpp"
#include "fracdelta/quadrature.hpp"

namespace fracdelta {

struct MellinParam {
  double shift = 0.0;  // a_j or b_j
  double scale = 1.0;  // A_j or B_j, > 0
};

/// H^{m,n}_{p,q}, with p = upper.size(), q = lower.size().
struct FoxHSpec {
  int m = 0;
  int n = 0;
  std::vector<MellinParam> upper;
  std::vector<MellinParam> lower;

  [[nodiscard]] int p() const { return static_cast<int>(upper.size()); }
  [[nodiscard]] int q() const { return static_cast<int>(lower.size()); }
};

/// Throws InvalidInput on bad orders, non-positive scales, or overlapping
/// left/right pole families.
void validate(const FoxHSpec& spec);

/// Theta(s) = prod_{j<=m} G(b_j + B_j s) prod_{l<=n} G(1 - a_l - A_l s)
///          / [prod_{j>m} G(1 - b_j - B_j s) prod_{l>n} G(a_l + A_l s)]
class MellinKernel {
 public:
  explicit MellinKernel(FoxHSpec spec);

  [[nodiscard]] const FoxHSpec& spec() const { return spec_; }

  /// log Theta(s). A zero of Theta (denominator pole) gives -inf real part.
  [[nodiscard]] std::complex<double> log_theta(std::complex<double> s) const;

  /// Midpoint of the gap between the rightmost left pole and the leftmost
  /// right pole. Throws ContourError when the families interleave.
  [[nodiscard]] double separating_abscissa() const;

  /// Exponential decay rate of |Theta(c + it)| in |t| (pi/2 times the
  /// balance sum of the scales). Must be positive for evaluate_foxh.
  [[nodiscard]] double decay_rate() const;

 private:
  FoxHSpec spec_;
};

/// Throws PoleError if s is within 1e-10 of a numerator pole.
std::complex<double> theta(const MellinKernel& kernel, std::complex<double> s);

/// (1 / 2 pi i) int_{c - i inf}^{c + i inf} Theta(s) z^{-s} ds for z > 0 and
/// real parameters. Evaluated on t in [0, T] and doubled via conjugate
/// symmetry; T grows until the analytic tail bound is below tol.
quad::QuadratureResult evaluate_foxh(const FoxHSpec& spec, double z,
                                     double tol = 1e-13);

enum class Method { FoxH, Quadrature, FiniteDifference };

/// Parameter block of F_alpha: H^{2,1}_{2,3}[(1,1),(1,a/2); (1,a),(1,1),(1,a/2)].
FoxHSpec falpha_spec(double alpha);

/// Parameter block of dF_alpha/dx for x > 0, from the H-function derivative
/// rule applied to x^{-1} H^{2,1}_{2,3}[|E| x^alpha].
FoxHSpec falpha1_spec(double alpha);

/// F_alpha(x). Even in x; F_alpha(0) is the closed-form J_0.
/// The FoxH method falls back to quadrature for |x| < 1e-8.
double falpha(double alpha, double energy_abs, double x,
              Method method = Method::Quadrature, double tol = 1e-12);

/// dF_alpha/dx, odd in x. At x = 0 only the quadrature method is defined
/// (returns 0); the other methods throw DomainError there.
double falpha1(double alpha, double energy_abs, double x,
               Method method = Method::Quadrature, double tol = 1e-12);

}  // namespace fracdelta
