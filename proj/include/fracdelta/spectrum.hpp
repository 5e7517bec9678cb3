#pragma once

// Bound states of (-Laplacian)^{alpha/2} + V0 delta^{(n)} on the line.
//
// In momentum space the eigenfunction is
//   phi(p) = sum_h K_h p^h / (|p|^alpha + |E|),
// and self-consistency of the K_h closes into K = A(E) K with
//   A_{hk}(E) = -i^n (-1)^{n-h} (V0 / 2pi) C(n,h) J_{n+k-h}(E).
// Eigenvalues are the E < 0 with det(A(E) - I) = 0.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fracdelta {

using cd = std::complex<double>;

struct SpectralProblem {
  double alpha = 2.0;  // order of the fractional Laplacian
  int n = 0;           // derivative order of the point interaction
  double v0 = -1.0;    // coupling strength
};

/// Throws DomainError unless n >= 0, alpha > 2n + 1 and v0 != 0.
void validate(const SpectralProblem& prob);

/// Dense square complex matrix, row-major. Only ever (n+1) x (n+1).
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t size = 0)
      : size_(size), data_(size * size) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  cd& operator()(std::size_t row, std::size_t col) {
    return data_[row * size_ + col];
  }
  const cd& operator()(std::size_t row, std::size_t col) const {
    return data_[row * size_ + col];
  }

 private:
  std::size_t size_;
  std::vector<cd> data_;
};

/// Determinant by Gaussian elimination with partial pivoting.
cd determinant(ComplexMatrix m);

struct CouplingMatrix {
  ComplexMatrix entries;
  double energy_abs = 0.0;
};

struct EigenSolution {
  double energy = 0.0;           // E_hat < 0
  std::vector<cd> coefficients;  // normalized K_hat, length n + 1
  double residual_norm = 0.0;    // ||(A(E_hat) - I) K_hat||_2
  bool suspected_degenerate = false;
};

CouplingMatrix coupling_matrix(const SpectralProblem& prob, double energy_abs);

/// det(A(E) - I) at E = -energy_abs.
cd det_condition(const SpectralProblem& prob, double energy_abs);

struct SearchOptions {
  double e_min_abs = 1e-8;
  double e_max_abs = 1e8;
  std::size_t scan_points = 400;
  double tol = 1e-13;  // relative, on |E|
};

/// All sign changes of Re det(A - I) on a log-spaced |E| scan, refined and
/// packaged with normalized coefficients. Sorted by increasing |E|. Empty
/// when there is no bound state in the window.
std::vector<EigenSolution> find_eigenvalues(const SpectralProblem& prob,
                                            const SearchOptions& search = {});

/// Delta well: E_hat = -[-V0 / (alpha sin(pi/alpha))]^{alpha/(alpha-1)} for
/// V0 < 0, nothing for V0 >= 0. DomainError for alpha <= 1.
std::optional<double> closed_n0(double alpha, double v0);

/// Delta-prime interaction: E_hat = -[|V0| / (alpha sqrt(sin(3pi/alpha)
/// sin(pi/alpha)))]^{alpha/(alpha-2)}. DomainError for alpha <= 3, V0 == 0.
double closed_n1(double alpha, double v0);

/// Unit-norm null vector of A(E) - I by full-pivot elimination. Phase fixed
/// so that i^{-h} K_h is real, positive at the first nonzero entry (for
/// K_0 != 0 this is "K_0 real positive"). RankError unless the null space
/// is one-dimensional.
std::vector<cd> coefficients(const SpectralProblem& prob,
                             double energy_abs_root);

/// c * k_raw with c > 0 such that sum conj(K_h) K_k M_{h+k}(E) = 2 pi.
std::vector<cd> normalize(const SpectralProblem& prob, double energy_abs,
                          std::span<const cd> k_raw);

/// max_p | |p|^alpha phi(p) + i^n (V0/2pi) int (p-q)^n phi(q) dq - E phi(p) |
/// with the q-moments of phi obtained by quadrature.
double residual(const SpectralProblem& prob, const EigenSolution& sol,
                std::span<const double> p_samples, double tol = 1e-12);

/// log-spaced points on [lo, hi], endpoints included.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// Re det(A - I) at every |E| in the scan. OpenMP-parallel over points.
std::vector<double> scan_determinant(const SpectralProblem& prob,
                                     std::span<const double> energies_abs);

/// Serial reference for scan_determinant; results are bit-identical.
std::vector<double> scan_determinant_serial(
    const SpectralProblem& prob, std::span<const double> energies_abs);

}  // namespace fracdelta
