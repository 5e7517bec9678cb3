#pragma once

// Real-space eigenfunctions
//   psi(x) = sum_h K_h (1/2pi) int_R p^h e^{ipx} / (|p|^alpha + |E|) dp
// assembled from F_alpha, dF_alpha/dx and higher Fourier moments.

#include <complex>
#include <cstddef>
#include <vector>

#include "fracdelta/foxh.hpp"
#include "fracdelta/spectrum.hpp"

namespace fracdelta {

/// phi(p) = sum_h K_h p^h / (|p|^alpha + |E|).
cd phi(const SpectralProblem& prob, const EigenSolution& sol, double p);

/// psi(x). The FoxH method covers the h = 0 term for |x| >= 1e-8 and the
/// h = 1 term for |x| >= 1e-2 |E|^{-1/alpha}; everything else, including
/// all higher moments, goes through quadrature.
/// Throws SolverError if the assembled value has |Im psi| >= 1e-9.
double psi(const SpectralProblem& prob, const EigenSolution& sol, double x,
           Method method = Method::Quadrature, double tol = 1e-12);

/// Closed delta-well eigenfunction via H^{2,1}_{2,3}; DomainError for v0 >= 0.
double psi_n0(double alpha, double v0, double x);

/// Closed delta-prime eigenfunction (c/2pi) F0(x) + (c/2pi i) a10 F1(x).
double psi_n1(double alpha, double v0, double x);

struct GridFunction {
  struct Meta {
    double alpha = 0.0;
    int n = 0;
    double v0 = 0.0;
    double energy = 0.0;
    Method method = Method::Quadrature;
  };
  std::vector<double> xs;
  std::vector<double> values;
  Meta meta;
};

/// psi on a uniform grid of `points` nodes over [x_min, x_max].
/// OpenMP-parallel over nodes.
GridFunction sample_grid(const SpectralProblem& prob, const EigenSolution& sol,
                         double x_min, double x_max, std::size_t points,
                         Method method = Method::Quadrature);

/// Serial reference for sample_grid; bit-identical output.
GridFunction sample_grid_serial(const SpectralProblem& prob,
                                const EigenSolution& sol, double x_min,
                                double x_max, std::size_t points,
                                Method method = Method::Quadrature);

/// Trapezoid rule for int psi^2 over the (possibly non-uniform) grid.
double trapezoid_norm(const GridFunction& grid);

/// Half-width L such that |psi(+-L)| < 1e-3 max|psi|, doubling from a
/// multiple of the length scale |E|^{-1/alpha}.
double adaptive_extent(const SpectralProblem& prob, const EigenSolution& sol,
                       Method method = Method::Quadrature);

/// psi on [-L, L] with L from adaptive_extent, on nodes graded
/// geometrically towards the origin (where psi has a cusp for n = 0) and
/// towards the algebraic tails. `refinement` divides every spacing.
GridFunction sample_graded(const SpectralProblem& prob,
                           const EigenSolution& sol, double refinement = 1.0,
                           Method method = Method::Quadrature);

}  // namespace fracdelta
