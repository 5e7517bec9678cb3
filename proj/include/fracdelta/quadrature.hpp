#pragma once

// Adaptive integration for the two integrand classes the solver needs:
// algebraically decaying integrands on (0, inf) and Fourier-type integrals
// 2 * int_0^inf g(p) {cos,sin}(p x) dp with algebraically decaying g.

#include <cstddef>
#include <functional>

namespace fracdelta::quad {

using RealFunction = std::function<double(double)>;

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimate, always >= 0
  std::size_t evaluations = 0;
};

struct Options {
  /// Requested accuracy, read as abs_error <= tol * (1 + |value|).
  double tol = 1e-12;
  /// Hard cap on integrand calls; exceeding it throws NonConvergence.
  std::size_t max_evaluations = kDefaultBudget;
  /// Characteristic length of the integrand in p (or w). The half-line is
  /// split here, and the oscillatory tail acceleration starts beyond a few
  /// multiples of it.
  double scale = 1.0;
};

/// Globally adaptive Gauss-Kronrod (10/21) on a finite interval [a, b].
/// Endpoints are never evaluated, so integrable endpoint singularities are
/// allowed.
QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const Options& opt = {});

/// int_0^inf f(w) dw for |f(w)| = O(w^-decay_exponent), decay_exponent > 1.
/// (scale, inf) is mapped onto (0, 1/scale) by w = 1/t.
QuadratureResult integrate_halfline(const RealFunction& f,
                                    double decay_exponent,
                                    const Options& opt = {});

/// 2 * int_0^inf g(p) cos(p x) dp. Depends on |x| only.
QuadratureResult integrate_fourier_cos(const RealFunction& g, double x,
                                       double decay_exponent,
                                       const Options& opt = {});

/// 2 * int_0^inf g(p) sin(p x) dp. Odd in x.
QuadratureResult integrate_fourier_sin(const RealFunction& g, double x,
                                       double decay_exponent,
                                       const Options& opt = {});

enum class Parity { Even, Odd };

struct MomentResult {
  QuadratureResult integral;
  /// Even: the full integral equals integral.value.
  /// Odd: the full integral equals i * integral.value.
  Parity parity = Parity::Even;
};

/// int_R p^moment g(|p|) e^{i p x} dp for an even amplitude g.
/// Requires decay_exponent > moment (conditionally convergent Fourier
/// integral); at x == 0 with an even moment it requires decay_exponent >
/// moment + 1.
MomentResult integrate_fourier_moment(const RealFunction& g, int moment,
                                      double x, double decay_exponent,
                                      const Options& opt = {});

}  // namespace fracdelta::quad
