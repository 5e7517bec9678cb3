#include "fracdelta/foxh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fracdelta/closed_integrals.hpp"
#include "fracdelta/error.hpp"

namespace fracdelta {
namespace {

using cd = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPoleTol = 1e-10;

// Rightmost pole of the Gamma(b_j + B_j s) family, j < m.
double left_pole_bound(const FoxHSpec& spec) {
  double bound = -kInf;
  for (int j = 0; j < spec.m; ++j) {
    bound = std::max(bound, -spec.lower[j].shift / spec.lower[j].scale);
  }
  return bound;
}

// Leftmost pole of the Gamma(1 - a_l - A_l s) family, l < n.
double right_pole_bound(const FoxHSpec& spec) {
  double bound = kInf;
  for (int l = 0; l < spec.n; ++l) {
    bound = std::min(bound, (1.0 - spec.upper[l].shift) / spec.upper[l].scale);
  }
  return bound;
}

void require_alpha(double alpha, double energy_abs) {
  if (!(alpha > 1.0)) throw DomainError("F_alpha needs alpha > 1");
  if (!(energy_abs > 0.0)) throw DomainError("|E| must be positive");
}

}  // namespace

void validate(const FoxHSpec& spec) {
  if (spec.m < 0 || spec.n < 0 || spec.m > spec.q() || spec.n > spec.p()) {
    throw InvalidInput("Fox H orders need 0 <= m <= q and 0 <= n <= p");
  }
  for (const auto& prm : spec.upper) {
    if (!(prm.scale > 0.0)) throw InvalidInput("upper scales A_j must be > 0");
  }
  for (const auto& prm : spec.lower) {
    if (!(prm.scale > 0.0)) throw InvalidInput("lower scales B_j must be > 0");
  }
  // Left poles -(b_j + k)/B_j and right poles (1 - a_l + k')/A_l can only
  // coincide where the two ranges overlap; walk that window.
  const double left_max = left_pole_bound(spec);
  const double right_min = right_pole_bound(spec);
  if (left_max < right_min) return;
  for (int j = 0; j < spec.m; ++j) {
    const auto& b = spec.lower[j];
    for (int l = 0; l < spec.n; ++l) {
      const auto& a = spec.upper[l];
      for (int k = 0; k < 256; ++k) {
        const double left = -(b.shift + k) / b.scale;
        if (left < right_min - 1e-12) break;
        const double kk = left * a.scale - 1.0 + a.shift;
        if (kk > -1e-12 && std::abs(kk - std::round(kk)) < 1e-12) {
          throw InvalidInput("left and right pole families intersect at s = " +
                             std::to_string(left));
        }
      }
    }
  }
}

MellinKernel::MellinKernel(FoxHSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
}

cd MellinKernel::log_theta(cd s) const {
  cd acc = 0.0;
  for (int j = 0; j < spec_.q(); ++j) {
    const auto& b = spec_.lower[j];
    if (j < spec_.m) {
      acc += log_gamma_complex(b.shift + b.scale * s);
    } else {
      const cd arg = 1.0 - b.shift - b.scale * s;
      if (near_gamma_pole(arg, 1e-14)) return {-kInf, 0.0};
      acc -= log_gamma_complex(arg);
    }
  }
  for (int l = 0; l < spec_.p(); ++l) {
    const auto& a = spec_.upper[l];
    if (l < spec_.n) {
      acc += log_gamma_complex(1.0 - a.shift - a.scale * s);
    } else {
      const cd arg = a.shift + a.scale * s;
      if (near_gamma_pole(arg, 1e-14)) return {-kInf, 0.0};
      acc -= log_gamma_complex(arg);
    }
  }
  return acc;
}

double MellinKernel::separating_abscissa() const {
  const double left = left_pole_bound(spec_);
  const double right = right_pole_bound(spec_);
  if (!(left < right)) {
    std::ostringstream msg;
    msg << "no vertical contour separates the poles (rightmost left pole "
        << left << ", leftmost right pole " << right << ")";
    throw ContourError(msg.str());
  }
  if (std::isinf(left) && std::isinf(right)) return 0.0;
  if (std::isinf(left)) return right - 0.5;
  if (std::isinf(right)) return left + 0.5;
  return 0.5 * (left + right);
}

double MellinKernel::decay_rate() const {
  double balance = 0.0;
  for (int j = 0; j < spec_.q(); ++j) {
    balance += (j < spec_.m ? 1.0 : -1.0) * spec_.lower[j].scale;
  }
  for (int l = 0; l < spec_.p(); ++l) {
    balance += (l < spec_.n ? 1.0 : -1.0) * spec_.upper[l].scale;
  }
  return 0.5 * std::numbers::pi * balance;
}

cd theta(const MellinKernel& kernel, cd s) {
  const auto& spec = kernel.spec();
  for (int j = 0; j < spec.m; ++j) {
    const auto& b = spec.lower[j];
    if (near_gamma_pole(b.shift + b.scale * s, kPoleTol * b.scale)) {
      throw PoleError("Theta has a pole near the requested s");
    }
  }
  for (int l = 0; l < spec.n; ++l) {
    const auto& a = spec.upper[l];
    if (near_gamma_pole(1.0 - a.shift - a.scale * s, kPoleTol * a.scale)) {
      throw PoleError("Theta has a pole near the requested s");
    }
  }
  return std::exp(kernel.log_theta(s));
}

quad::QuadratureResult evaluate_foxh(const FoxHSpec& spec, double z,
                                     double tol) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw InvalidInput("Fox H argument must be positive and finite");
  }
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const MellinKernel kernel(spec);
  const double c = kernel.separating_abscissa();
  const double kappa = kernel.decay_rate();
  if (!(kappa > 0.0)) {
    throw ContourError("Theta does not decay along the contour");
  }
  // Sanity: the contour itself must stay clear of every numerator pole.
  (void)theta(kernel, cd(c, 0.0));

  const double log_z = std::log(z);
  const auto magnitude = [&](double t) {
    const cd s(c, t);
    return std::exp(kernel.log_theta(s).real() - c * log_z);
  };
  const quad::RealFunction integrand = [&](double t) {
    const cd s(c, t);
    return std::exp(kernel.log_theta(s) - s * log_z).real() / std::numbers::pi;
  };

  // Grow the cut-off until the exponential tail bound is negligible.
  double cutoff = 4.0;
  while (magnitude(cutoff) / (std::numbers::pi * kappa) > 0.1 * tol) {
    cutoff *= 1.25;
    if (cutoff > 1e4) {
      throw NonConvergence("Mellin-Barnes tail does not decay below tol");
    }
  }
  quad::Options opt;
  opt.tol = tol;
  quad::QuadratureResult result =
      quad::integrate_interval(integrand, 0.0, cutoff, opt);
  result.abs_error += magnitude(cutoff) / (std::numbers::pi * kappa);
  return result;
}

FoxHSpec falpha_spec(double alpha) {
  return FoxHSpec{2,
                  1,
                  {{1.0, 1.0}, {1.0, alpha / 2.0}},
                  {{1.0, alpha}, {1.0, 1.0}, {1.0, alpha / 2.0}}};
}

FoxHSpec falpha1_spec(double alpha) {
  return FoxHSpec{2,
                  2,
                  {{1.0, alpha}, {1.0, 1.0}, {1.0, alpha / 2.0}},
                  {{1.0, alpha}, {1.0, 1.0}, {1.0, alpha / 2.0}, {2.0, alpha}}};
}

double falpha(double alpha, double energy_abs, double x, Method method,
              double tol) {
  require_alpha(alpha, energy_abs);
  const double ax = std::abs(x);
  if (ax == 0.0) return j_closed({0, alpha, energy_abs});

  switch (method) {
    case Method::FoxH:
      if (ax >= 1e-8) {
        const double prefactor =
            2.0 * std::numbers::pi / (energy_abs * ax);
        const double z = energy_abs * std::pow(ax, alpha);
        // H-tolerance scaled so the assembled F_alpha meets tol.
        const double h_tol = std::min(1e-13, tol / prefactor);
        return prefactor * evaluate_foxh(falpha_spec(alpha), z, h_tol).value;
      }
      [[fallthrough]];
    case Method::Quadrature: {
      quad::Options opt;
      opt.tol = tol;
      opt.scale = std::pow(energy_abs, 1.0 / alpha);
      const quad::RealFunction g = [alpha, energy_abs](double p) {
        return 1.0 / (std::pow(p, alpha) + energy_abs);
      };
      return quad::integrate_fourier_cos(g, ax, alpha, opt).value;
    }
    case Method::FiniteDifference:
      break;
  }
  throw InvalidInput("F_alpha has no finite-difference method");
}

double falpha1(double alpha, double energy_abs, double x, Method method,
               double tol) {
  require_alpha(alpha, energy_abs);
  if (x == 0.0 && method != Method::Quadrature) {
    throw DomainError("dF_alpha/dx at x = 0 is only available by quadrature");
  }
  const double ax = std::abs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;

  switch (method) {
    case Method::FoxH: {
      const double prefactor =
          2.0 * std::numbers::pi / (energy_abs * ax * ax);
      const double z = energy_abs * std::pow(ax, alpha);
      const double h_tol = std::min(1e-13, tol / prefactor);
      return sign * prefactor *
             evaluate_foxh(falpha1_spec(alpha), z, h_tol).value;
    }
    case Method::Quadrature: {
      quad::Options opt;
      opt.tol = tol;
      opt.scale = std::pow(energy_abs, 1.0 / alpha);
      const quad::RealFunction g = [alpha, energy_abs](double p) {
        return p / (std::pow(p, alpha) + energy_abs);
      };
      return -quad::integrate_fourier_sin(g, x, alpha - 1.0, opt).value;
    }
    case Method::FiniteDifference: {
      // Fourth-order central stencil; the step stays well inside (0, |x|)
      // so the cusp of F_alpha at the origin is never straddled.
      const double length = std::pow(energy_abs, -1.0 / alpha);
      const double h = 1e-2 * std::min(ax, length);
      auto f = [&](double at) {
        return falpha(alpha, energy_abs, at, Method::Quadrature, 1e-13);
      };
      const double d = (f(ax - 2 * h) - 8 * f(ax - h) + 8 * f(ax + h) -
                        f(ax + 2 * h)) /
                       (12 * h);
      return sign * d;
    }
  }
  return 0.0;
}

}  // namespace fracdelta
