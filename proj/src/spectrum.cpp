#include "fracdelta/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "fracdelta/closed_integrals.hpp"
#include "fracdelta/error.hpp"
#include "fracdelta/quadrature.hpp"

namespace fracdelta {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// i^k for integer k >= 0, exact.
cd i_pow(int k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

double norm2(std::span<const cd> v) {
  double s = 0.0;
  for (const cd& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ComplexMatrix shifted(const SpectralProblem& prob, double energy_abs) {
  ComplexMatrix m = coupling_matrix(prob, energy_abs).entries;
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) -= 1.0;
  return m;
}

double real_det(const SpectralProblem& prob, double energy_abs) {
  return det_condition(prob, energy_abs).real();
}

// Bisection in log|E| between a sign change, then one secant-Newton polish.
double refine_root(const SpectralProblem& prob, double lo, double hi,
                   double tol) {
  double u_lo = std::log(lo);
  double u_hi = std::log(hi);
  double f_lo = real_det(prob, lo);
  for (int iter = 0; u_hi - u_lo > tol; ++iter) {
    if (iter > 300) throw SolverError("bisection stalled");
    const double u_mid = 0.5 * (u_lo + u_hi);
    const double f_mid = real_det(prob, std::exp(u_mid));
    if (f_mid == 0.0) return std::exp(u_mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      u_lo = u_mid;
      f_lo = f_mid;
    } else {
      u_hi = u_mid;
    }
  }
  double root = std::exp(0.5 * (u_lo + u_hi));
  const double f_root = real_det(prob, root);
  const double h = 1e-6 * root;
  const double slope =
      (real_det(prob, root + h) - real_det(prob, root - h)) / (2.0 * h);
  if (slope != 0.0 && std::isfinite(slope)) {
    const double polished = root - f_root / slope;
    if (polished > std::exp(u_lo) * (1 - 1e-12) &&
        polished < std::exp(u_hi) * (1 + 1e-12) &&
        std::abs(real_det(prob, polished)) < std::abs(f_root)) {
      root = polished;
    }
  }
  return root;
}

}  // namespace

void validate(const SpectralProblem& prob) {
  if (prob.n < 0) throw DomainError("derivative order n must be >= 0");
  if (!(prob.alpha > 2.0 * prob.n + 1.0)) {
    std::ostringstream msg;
    msg << "alpha must exceed 2n + 1 = " << 2 * prob.n + 1 << " (got "
        << prob.alpha << ")";
    throw DomainError(msg.str());
  }
  if (prob.v0 == 0.0 || !std::isfinite(prob.v0)) {
    throw DomainError("V0 must be finite and nonzero");
  }
}

cd determinant(ComplexMatrix m) {
  const std::size_t n = m.size();
  cd det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cd factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

CouplingMatrix coupling_matrix(const SpectralProblem& prob, double energy_abs) {
  validate(prob);
  if (!(energy_abs > 0.0)) throw DomainError("|E| must be positive");
  const int n = prob.n;
  CouplingMatrix out{ComplexMatrix(static_cast<std::size_t>(n + 1)),
                     energy_abs};
  const cd prefactor = -i_pow(n) * (prob.v0 / kTwoPi);
  for (int h = 0; h <= n; ++h) {
    const double sign = (n - h) % 2 == 0 ? 1.0 : -1.0;
    for (int k = 0; k <= n; ++k) {
      const double j = j_closed({n + k - h, prob.alpha, energy_abs});
      out.entries(h, k) = prefactor * (sign * binomial(n, h) * j);
    }
  }
  return out;
}

cd det_condition(const SpectralProblem& prob, double energy_abs) {
  return determinant(shifted(prob, energy_abs));
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) {
    throw InvalidInput("log_spaced needs 0 < lo < hi and count >= 2");
  }
  std::vector<double> out(count);
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + step * static_cast<double>(i));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> scan_determinant_serial(
    const SpectralProblem& prob, std::span<const double> energies_abs) {
  validate(prob);
  std::vector<double> out(energies_abs.size());
  for (std::size_t i = 0; i < energies_abs.size(); ++i) {
    out[i] = real_det(prob, energies_abs[i]);
  }
  return out;
}

std::vector<double> scan_determinant(const SpectralProblem& prob,
                                     std::span<const double> energies_abs) {
  validate(prob);
  std::vector<double> out(energies_abs.size());
  const auto count = static_cast<std::ptrdiff_t>(energies_abs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[i] = real_det(prob, energies_abs[i]);
  }
  return out;
}

std::vector<EigenSolution> find_eigenvalues(const SpectralProblem& prob,
                                            const SearchOptions& search) {
  validate(prob);
  if (!(search.tol > 0.0)) throw InvalidInput("search tolerance must be > 0");
  const std::vector<double> grid =
      log_spaced(search.e_min_abs, search.e_max_abs, search.scan_points);
  const std::vector<double> values = scan_determinant(prob, grid);

  std::vector<double> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 &&
        (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      roots.push_back(refine_root(prob, grid[i], grid[i + 1], search.tol));
    }
  }

  std::vector<EigenSolution> out;
  for (const double root : roots) {
    if (!out.empty()) {
      const double prev = -out.back().energy;
      if (std::abs(root - prev) <= 1e-6 * std::max(root, prev)) {
        out.back().suspected_degenerate = true;
        continue;
      }
    }
    const cd det = det_condition(prob, root);
    if (std::abs(det.imag()) >= 1e-10) {
      std::ostringstream msg;
      msg << "det(A - I) is not real at |E| = " << root
          << " (Im = " << det.imag() << ")";
      throw SolverError(msg.str());
    }
    EigenSolution sol;
    sol.energy = -root;
    sol.coefficients = normalize(prob, root, coefficients(prob, root));

    const ComplexMatrix m = shifted(prob, root);
    std::vector<cd> image(m.size());
    for (std::size_t h = 0; h < m.size(); ++h) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        image[h] += m(h, k) * sol.coefficients[k];
      }
    }
    sol.residual_norm = norm2(image);
    if (!(sol.residual_norm <=
          1e-8 * std::max(1.0, norm2(sol.coefficients)))) {
      throw SolverError("null-vector residual too large at |E| = " +
                        std::to_string(root));
    }
    out.push_back(std::move(sol));
  }
  return out;
}

std::optional<double> closed_n0(double alpha, double v0) {
  if (!(alpha > 1.0)) throw DomainError("delta well needs alpha > 1");
  if (!(v0 < 0.0)) return std::nullopt;
  const double base = -v0 / (alpha * std::sin(std::numbers::pi / alpha));
  return -std::pow(base, alpha / (alpha - 1.0));
}

double closed_n1(double alpha, double v0) {
  if (!(alpha > 3.0)) throw DomainError("delta-prime needs alpha > 3");
  if (v0 == 0.0) throw DomainError("V0 must be nonzero");
  using std::numbers::pi;
  const double sines = std::sin(3.0 * pi / alpha) * std::sin(pi / alpha);
  const double base = std::abs(v0) / (alpha * std::sqrt(sines));
  return -std::pow(base, alpha / (alpha - 2.0));
}

std::vector<cd> coefficients(const SpectralProblem& prob,
                             double energy_abs_root) {
  ComplexMatrix m = shifted(prob, energy_abs_root);
  const std::size_t n = m.size();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);

  double largest = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      largest = std::max(largest, std::abs(m(i, j)));
    }
  }
  const double threshold = 1e-8 * largest;

  // Full-pivot elimination to row echelon form.
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (std::abs(m(i, j)) > std::abs(m(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (std::abs(m(pr, pc)) <= threshold) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pr, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, pc));
    std::swap(cols[k], cols[pc]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cd factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
    ++rank;
  }
  if (rank != n - 1) {
    throw RankError("null space of A(E) - I has dimension " +
                    std::to_string(n - rank) + ", expected 1");
  }

  // Back substitution with the last permuted unknown set to 1.
  std::vector<cd> y(n);
  y[n - 1] = 1.0;
  for (std::size_t r = n - 1; r-- > 0;) {
    cd acc = 0.0;
    for (std::size_t j = r + 1; j < n; ++j) acc += m(r, j) * y[j];
    y[r] = -acc / m(r, r);
  }
  std::vector<cd> k_vec(n);
  for (std::size_t i = 0; i < n; ++i) k_vec[cols[i]] = y[i];

  const double len = norm2(k_vec);
  for (cd& x : k_vec) x /= len;

  // i^{-h} K_h is real for a true root; rotate it positive at the first
  // nonzero entry and drop the rounding crumbs.
  std::size_t lead = 0;
  while (lead < n && std::abs(k_vec[lead]) <= 1e-12) ++lead;
  const cd rotated = k_vec[lead] * std::conj(i_pow(static_cast<int>(lead)));
  const cd phase = std::conj(rotated) / std::abs(rotated);
  for (std::size_t h = 0; h < n; ++h) {
    const cd real_part =
        k_vec[h] * phase * std::conj(i_pow(static_cast<int>(h)));
    if (std::abs(real_part.imag()) > 1e-8) {
      throw SolverError("coefficient phase structure violated at h = " +
                        std::to_string(h));
    }
    k_vec[h] = i_pow(static_cast<int>(h)) * real_part.real();
  }
  return k_vec;
}

std::vector<cd> normalize(const SpectralProblem& prob, double energy_abs,
                          std::span<const cd> k_raw) {
  validate(prob);
  if (k_raw.size() != static_cast<std::size_t>(prob.n + 1)) {
    throw InvalidInput("coefficient vector must have length n + 1");
  }
  if (norm2(k_raw) == 0.0) throw InvalidInput("coefficient vector is zero");
  cd form = 0.0;
  for (std::size_t h = 0; h < k_raw.size(); ++h) {
    for (std::size_t k = 0; k < k_raw.size(); ++k) {
      const double m =
          m_closed({static_cast<int>(h + k), prob.alpha, energy_abs});
      form += std::conj(k_raw[h]) * k_raw[k] * m;
    }
  }
  if (!(form.real() > 0.0)) {
    throw DomainError("normalization form is not positive");
  }
  const double c = std::sqrt(kTwoPi / form.real());
  std::vector<cd> out(k_raw.begin(), k_raw.end());
  for (cd& x : out) x *= c;
  return out;
}

double residual(const SpectralProblem& prob, const EigenSolution& sol,
                std::span<const double> p_samples, double tol) {
  validate(prob);
  const int n = prob.n;
  const double alpha = prob.alpha;
  const double e_abs = -sol.energy;
  if (!(e_abs > 0.0)) throw DomainError("eigenvalue must be negative");

  const auto phi = [&](double p) {
    cd acc = 0.0;
    double power = 1.0;
    for (const cd& k : sol.coefficients) {
      acc += k * power;
      power *= p;
    }
    return acc / (std::pow(std::abs(p), alpha) + e_abs);
  };

  // moments[j] = int_R q^j phi(q) dq, folded onto the half-line.
  quad::Options opt;
  opt.tol = tol;
  opt.scale = std::pow(e_abs, 1.0 / alpha);
  std::vector<cd> moments(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    const double reflect = j % 2 == 0 ? 1.0 : -1.0;
    const auto folded = [&, j, reflect](double w) {
      return std::pow(w, j) * (phi(w) + reflect * phi(-w));
    };
    const double decay = alpha - j - n;
    const double re = quad::integrate_halfline(
        [&](double w) { return folded(w).real(); }, decay, opt).value;
    const double im = quad::integrate_halfline(
        [&](double w) { return folded(w).imag(); }, decay, opt).value;
    moments[static_cast<std::size_t>(j)] = {re, im};
  }

  const cd coupling = i_pow(n) * (prob.v0 / kTwoPi);
  double worst = 0.0;
  for (const double p : p_samples) {
    cd convolution = 0.0;
    for (int h = 0; h <= n; ++h) {
      const double sign = (n - h) % 2 == 0 ? 1.0 : -1.0;
      convolution += binomial(n, h) * std::pow(p, h) * sign *
                     moments[static_cast<std::size_t>(n - h)];
    }
    const cd value = std::pow(std::abs(p), alpha) * phi(p) +
                     coupling * convolution + e_abs * phi(p);
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

}  // namespace fracdelta
