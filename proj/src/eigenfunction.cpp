#include "fracdelta/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fracdelta/closed_integrals.hpp"
#include "fracdelta/error.hpp"
#include "fracdelta/quadrature.hpp"

namespace fracdelta {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNearOrigin = 1e-8;
// Inside this fraction of the length scale the x^{-2} prefactor of the Fox H
// form of dF/dx amplifies contour error past 1e-10 relative.
constexpr double kDerivativeFoxFloor = 1e-2;

bool derivative_near_origin(double alpha, double e_abs, double x) {
  return std::abs(x) < kDerivativeFoxFloor * std::pow(e_abs, -1.0 / alpha);
}

double checked_real(cd value, double x) {
  if (!(std::abs(value.imag()) < 1e-9)) {
    std::ostringstream msg;
    msg << "eigenfunction is not real at x = " << x << " (Im = "
        << value.imag() << ")";
    throw SolverError(msg.str());
  }
  return value.real();
}

// int_R p^h e^{ipx} / (|p|^alpha + |E|) dp.
cd fourier_moment(double alpha, double e_abs, int h, double x, Method method,
                  double tol) {
  const Method m = std::abs(x) < kNearOrigin ? Method::Quadrature : method;
  if (h == 0) return falpha(alpha, e_abs, x, m, tol);
  if (h == 1) {
    const Method m1 =
        derivative_near_origin(alpha, e_abs, x) ? Method::Quadrature : m;
    return cd(0.0, -1.0) * falpha1(alpha, e_abs, x, m1, tol);
  }
  quad::Options opt;
  opt.tol = tol;
  opt.scale = std::pow(e_abs, 1.0 / alpha);
  const quad::RealFunction g = [alpha, e_abs](double p) {
    return 1.0 / (std::pow(p, alpha) + e_abs);
  };
  const auto r = quad::integrate_fourier_moment(g, h, x, alpha, opt);
  return r.parity == quad::Parity::Even ? cd(r.integral.value, 0.0)
                                        : cd(0.0, r.integral.value);
}

void require_grid(double x_min, double x_max, std::size_t points) {
  if (!(x_min < x_max)) throw InvalidInput("grid needs x_min < x_max");
  if (points < 2) throw InvalidInput("grid needs at least 2 points");
}

double uniform_node(double x_min, double x_max, std::size_t points,
                    std::size_t i) {
  if (i + 1 == points) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) /
                     static_cast<double>(points - 1);
}

GridFunction::Meta make_meta(const SpectralProblem& prob,
                             const EigenSolution& sol, Method method) {
  return {prob.alpha, prob.n, prob.v0, sol.energy, method};
}

}  // namespace

cd phi(const SpectralProblem& prob, const EigenSolution& sol, double p) {
  cd acc = 0.0;
  double power = 1.0;
  for (const cd& k : sol.coefficients) {
    acc += k * power;
    power *= p;
  }
  return acc / (std::pow(std::abs(p), prob.alpha) - sol.energy);
}

double psi(const SpectralProblem& prob, const EigenSolution& sol, double x,
           Method method, double tol) {
  validate(prob);
  if (method == Method::FiniteDifference) {
    throw InvalidInput("psi supports the FoxH and Quadrature methods");
  }
  const double e_abs = -sol.energy;
  cd acc = 0.0;
  for (std::size_t h = 0; h < sol.coefficients.size(); ++h) {
    const cd k = sol.coefficients[h];
    if (k == 0.0) continue;
    acc += k * fourier_moment(prob.alpha, e_abs, static_cast<int>(h), x,
                              method, tol);
  }
  return checked_real(acc / kTwoPi, x);
}

double psi_n0(double alpha, double v0, double x) {
  const auto energy = closed_n0(alpha, v0);
  if (!energy) throw DomainError("delta well has no bound state for V0 >= 0");
  const double e_abs = -*energy;
  const double ax = std::abs(x);
  const double amplitude = std::sqrt(-v0 * alpha / ((alpha - 1.0) * e_abs));
  if (ax < kNearOrigin) {
    // K_0 / (2 pi) * J_0, with K_0 = |E| * amplitude.
    return amplitude * e_abs / kTwoPi *
           falpha(alpha, e_abs, x, Method::Quadrature);
  }
  const double z = e_abs * std::pow(ax, alpha);
  const double h_tol = std::min(1e-13, 1e-12 * ax / amplitude);
  return amplitude / ax * evaluate_foxh(falpha_spec(alpha), z, h_tol).value;
}

double psi_n1(double alpha, double v0, double x) {
  const double e_abs = -closed_n1(alpha, v0);
  using std::numbers::pi;
  const cd a10 = cd(0.0, -v0 / (alpha * std::sin(pi / alpha))) *
                 std::pow(e_abs, (1.0 - alpha) / alpha);
  const double m0 = m_closed({0, alpha, e_abs});
  const double m2 = m_closed({2, alpha, e_abs});
  const double c = std::sqrt(kTwoPi) / std::sqrt(m0 + std::norm(a10) * m2);
  const bool origin = std::abs(x) < kNearOrigin;
  const double even =
      falpha(alpha, e_abs, x, origin ? Method::Quadrature : Method::FoxH);
  const double odd = falpha1(alpha, e_abs, x,
                             derivative_near_origin(alpha, e_abs, x)
                                 ? Method::Quadrature
                                 : Method::FoxH);
  const cd value = c / kTwoPi * even + c / (kTwoPi * cd(0.0, 1.0)) * a10 * odd;
  return checked_real(value, x);
}

GridFunction sample_grid_serial(const SpectralProblem& prob,
                                const EigenSolution& sol, double x_min,
                                double x_max, std::size_t points,
                                Method method) {
  require_grid(x_min, x_max, points);
  GridFunction out{std::vector<double>(points), std::vector<double>(points),
                   make_meta(prob, sol, method)};
  for (std::size_t i = 0; i < points; ++i) {
    out.xs[i] = uniform_node(x_min, x_max, points, i);
    out.values[i] = psi(prob, sol, out.xs[i], method);
  }
  return out;
}

GridFunction sample_grid(const SpectralProblem& prob, const EigenSolution& sol,
                         double x_min, double x_max, std::size_t points,
                         Method method) {
  require_grid(x_min, x_max, points);
  validate(prob);
  GridFunction out{std::vector<double>(points), std::vector<double>(points),
                   make_meta(prob, sol, method)};
  for (std::size_t i = 0; i < points; ++i) {
    out.xs[i] = uniform_node(x_min, x_max, points, i);
  }
  // Exceptions must not cross the OpenMP region boundary.
  std::string failure;
  const auto count = static_cast<std::ptrdiff_t>(points);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out.values[i] = psi(prob, sol, out.xs[i], method);
    } catch (const std::exception& e) {
#pragma omp critical(fracdelta_grid_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw SolverError("grid evaluation failed: " + failure);
  return out;
}

double trapezoid_norm(const GridFunction& grid) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < grid.xs.size(); ++i) {
    const double h = grid.xs[i + 1] - grid.xs[i];
    acc += 0.5 * h *
           (grid.values[i] * grid.values[i] +
            grid.values[i + 1] * grid.values[i + 1]);
  }
  return acc;
}

double adaptive_extent(const SpectralProblem& prob, const EigenSolution& sol,
                       Method method) {
  const double length = std::pow(-sol.energy, -1.0 / prob.alpha);
  double peak = 0.0;
  for (int i = -16; i <= 16; ++i) {
    peak = std::max(peak, std::abs(psi(prob, sol, length * i / 8.0, method)));
  }
  double half_width = 8.0 * length;
  for (int iter = 0; iter < 40; ++iter) {
    const double right = std::abs(psi(prob, sol, half_width, method));
    const double left = std::abs(psi(prob, sol, -half_width, method));
    if (std::max(left, right) < 1e-3 * peak) return half_width;
    half_width *= 2.0;
  }
  throw NonConvergence("eigenfunction tail does not fall below 1e-3 of peak");
}

GridFunction sample_graded(const SpectralProblem& prob,
                           const EigenSolution& sol, double refinement,
                           Method method) {
  if (!(refinement >= 1.0)) throw InvalidInput("refinement must be >= 1");
  const double length = std::pow(-sol.energy, -1.0 / prob.alpha);
  const double half_width = adaptive_extent(prob, sol, method);

  // Spacing: geometric towards 0, capped in the core, proportional to |x|
  // in the tails.
  std::vector<double> right{0.0};
  double x = 1e-7 * length / refinement;
  while (x < half_width) {
    right.push_back(x);
    double h = x < length ? std::min(0.03 * x, length / 150.0) : x / 75.0;
    x += h / refinement;
  }
  right.push_back(half_width);

  std::vector<double> nodes;
  nodes.reserve(2 * right.size() - 1);
  for (std::size_t i = right.size(); i-- > 1;) nodes.push_back(-right[i]);
  nodes.insert(nodes.end(), right.begin(), right.end());

  GridFunction out{nodes, std::vector<double>(nodes.size()),
                   make_meta(prob, sol, method)};
  std::string failure;
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out.values[i] = psi(prob, sol, out.xs[i], method);
    } catch (const std::exception& e) {
#pragma omp critical(fracdelta_grid_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw SolverError("grid evaluation failed: " + failure);
  return out;
}

}  // namespace fracdelta
