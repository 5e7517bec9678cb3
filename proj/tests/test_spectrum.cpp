#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "fracdelta/closed_integrals.hpp"
#include "fracdelta/error.hpp"
#include "fracdelta/spectrum.hpp"
#include "oracles.hpp"

using namespace fracdelta;
using std::numbers::pi;

namespace {

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

const std::vector<double> kSamples{0.0, 0.5, 1.0, 3.0};

// The delta-well root written out by hand, independent of closed_n0.
double textbook_n0(double alpha, double v0) {
  const double s = std::sin(pi / alpha);
  return -std::exp(alpha / (alpha - 1.0) * std::log(-v0 / (alpha * s)));
}

}  // namespace

TEST_CASE("coupling matrix examples") {
  const auto a = coupling_matrix({2.0, 0, -1.0}, 1.0);
  REQUIRE(a.entries.size() == 1);
  CHECK(std::abs(a.entries(0, 0) - cd(0.5, 0.0)) < 1e-15);

  const auto b = coupling_matrix({4.0, 1, 1.0}, 1.0);
  CHECK(b.entries(0, 0) == cd(0.0, 0.0));
  CHECK(b.entries(1, 1) == cd(0.0, 0.0));
  CHECK(std::abs(b.entries(0, 1) - cd(0.0, 0.35355339059327373)) < 1e-15);
  CHECK(std::abs(b.entries(1, 0) - cd(0.0, -0.35355339059327373)) < 1e-15);
  CHECK(std::abs(b.entries(0, 1) * b.entries(1, 0) - 0.125) < 1e-15);
}

TEST_CASE("coupling matrix: a00 of the delta well by quadrature of J0") {
  const double alpha = 2.5, e = 0.6, v0 = -1.3;
  const double j0 =
      2.0 * oracle::halfline([&](double q) { return 1.0 / (std::pow(q, alpha) + e); });
  const auto a = coupling_matrix({alpha, 0, v0}, e);
  CHECK(rel(a.entries(0, 0).real(), -v0 / (2 * pi) * j0) < 1e-9);
}

TEST_CASE("determinant") {
  ComplexMatrix m(3);
  m(0, 0) = 0.0; m(0, 1) = 2.0; m(0, 2) = 1.0;
  m(1, 0) = 1.0; m(1, 1) = cd(0, 1); m(1, 2) = 0.0;
  m(2, 0) = 3.0; m(2, 1) = 0.0; m(2, 2) = 1.0;
  // Cofactor expansion along the first row.
  const cd want = -2.0 * (1.0 * 1.0 - 0.0 * 3.0) + 1.0 * (0.0 - cd(0, 1) * 3.0);
  CHECK(std::abs(determinant(m) - want) < 1e-14);
  CHECK(determinant(ComplexMatrix(2)) == 0.0);
}

TEST_CASE("det_condition examples") {
  CHECK(std::abs(det_condition({2.0, 0, -1.0}, 1.0) - -0.5) < 1e-15);
  CHECK(std::abs(det_condition({2.0, 0, -1.0}, 0.25)) < 1e-12);
  CHECK(std::abs(det_condition({4.0, 1, 1.0}, 0.125)) < 1e-12);
}

TEST_CASE("det(A - I) is real for every n") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const SpectralProblem prob{2 * n + 1 + 0.1 + 4 * u(rng), n,
                                 (u(rng) - 0.5) * 6};
      const double e = std::exp(6 * (u(rng) - 0.5));
      const cd d = det_condition(prob, e);
      CHECK(std::abs(d.imag()) <= 1e-12 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("parity zero pattern is exact") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 3; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const SpectralProblem prob{2 * n + 1 + 1e-3 + 5 * u(rng), n,
                                 (u(rng) - 0.5) * 10};
      const auto a = coupling_matrix(prob, std::exp(8 * (u(rng) - 0.5)));
      for (int h = 0; h <= n; ++h) {
        for (int k = 0; k <= n; ++k) {
          if ((n + k - h) % 2) {
            CHECK(a.entries(h, k) == cd(0.0, 0.0));
          } else {
            CHECK(a.entries(h, k) != cd(0.0, 0.0));
          }
        }
      }
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(*closed_n0(2.0, -1.0) == -0.25);
  CHECK(rel(*closed_n0(1.5, -1.0), -0.45617799047081542) < 1e-14);
  CHECK_FALSE(closed_n0(2.0, 1.0).has_value());
  CHECK_FALSE(closed_n0(2.0, 0.0).has_value());
  CHECK_THROWS_AS(closed_n0(1.0, -1.0), DomainError);
  CHECK(rel(closed_n1(4.0, 1.0), -0.125) < 1e-15);
  CHECK(closed_n1(4.0, -1.0) == closed_n1(4.0, 1.0));
  CHECK(rel(closed_n1(3.5, 2.0), -0.95648229710080888) < 1e-14);
  CHECK(rel(closed_n1(5.5, 1.0), -0.11218151584921298) < 1e-14);
  CHECK_THROWS_AS(closed_n1(3.0, 1.0), DomainError);
  CHECK_THROWS_AS(closed_n1(4.0, 0.0), DomainError);
  for (double alpha : {1.5, 2.0, 2.5, 7.0}) {
    for (double v0 : {-0.5, -2.0}) {
      CHECK(rel(*closed_n0(alpha, v0), textbook_n0(alpha, v0)) < 1e-14);
    }
  }
}

TEST_CASE("find_eigenvalues examples") {
  const auto well = find_eigenvalues({2.0, 0, -1.0});
  REQUIRE(well.size() == 1);
  CHECK(rel(well[0].energy, -0.25) < 1e-12);
  CHECK_FALSE(well[0].suspected_degenerate);
  CHECK(find_eigenvalues({2.0, 0, 1.0}).empty());

  const auto prime = find_eigenvalues({3.5, 1, 2.0});
  REQUIRE(prime.size() == 1);
  CHECK(rel(prime[0].energy, -0.95648229710080888) < 1e-10);
}

TEST_CASE("find_eigenvalues matches the closed forms") {
  for (double alpha : {1.5, 2.0, 2.5}) {
    for (double v0 : {-0.5, -1.0, -2.0}) {
      const auto roots = find_eigenvalues({alpha, 0, v0});
      REQUIRE(roots.size() == 1);
      CHECK(rel(roots[0].energy, *closed_n0(alpha, v0)) < 1e-10);
    }
    CHECK(find_eigenvalues({alpha, 0, 0.7}).empty());
  }
  for (double alpha : {3.5, 4.0, 5.5}) {
    for (double v0 : {0.5, 1.0, 2.0}) {
      const auto plus = find_eigenvalues({alpha, 1, v0});
      const auto minus = find_eigenvalues({alpha, 1, -v0});
      REQUIRE(plus.size() == 1);
      REQUIRE(minus.size() == 1);
      CHECK(rel(plus[0].energy, closed_n1(alpha, v0)) < 1e-10);
      CHECK(plus[0].energy == minus[0].energy);
    }
  }
}

TEST_CASE("classical delta well: E = -V0^2/4") {
  for (double v0 : {-0.3, -1.0, -2.5}) {
    const auto roots = find_eigenvalues({2.0, 0, v0});
    REQUIRE(roots.size() == 1);
    CHECK(rel(roots[0].energy, -v0 * v0 / 4.0) < 1e-12);
  }
}

TEST_CASE("coefficients and normalize") {
  const SpectralProblem well{2.0, 0, -1.0};
  const auto k0 = coefficients(well, 0.25);
  REQUIRE(k0.size() == 1);
  CHECK(k0[0] == cd(1.0, 0.0));
  const auto kn = normalize(well, 0.25, k0);
  CHECK(std::abs(kn[0] - std::sqrt(0.5)) < 1e-15);

  const SpectralProblem prime{4.0, 1, 1.0};
  const auto k1 = coefficients(prime, 0.125);
  const cd a10 = coupling_matrix(prime, 0.125).entries(1, 0);
  CHECK(a10.real() == 0.0);
  CHECK(k1[0].imag() == 0.0);
  CHECK(k1[0].real() > 0.0);
  CHECK(std::abs(k1[1] / k1[0] - a10) < 1e-12);

  // c = sqrt(2 pi) [M0 + |a10|^2 M2]^{-1/2} with K = c [1, a10].
  const double m0 = m_closed({0, 4.0, 0.125});
  const double m2 = m_closed({2, 4.0, 0.125});
  const double c = std::sqrt(2 * pi / (m0 + std::norm(a10) * m2));
  const std::vector<cd> raw{1.0, a10};
  const auto kc = normalize(prime, 0.125, raw);
  CHECK(std::abs(kc[0] - c) < 1e-14);
  CHECK(std::abs(kc[1] - c * a10) < 1e-14);
}

TEST_CASE("normalize: projective") {
  const SpectralProblem prime{4.0, 1, 1.0};
  const std::vector<cd> raw{1.0, cd(0.0, -0.7)};
  const auto base = normalize(prime, 0.125, raw);
  for (cd lambda : {cd(3.0, 0.0), cd(0.0, -2.0), cd(-0.1, 0.4)}) {
    std::vector<cd> scaled{lambda * raw[0], lambda * raw[1]};
    const auto out = normalize(prime, 0.125, scaled);
    const cd phase = out[0] / base[0];
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-14);
    CHECK(std::abs(out[1] - phase * base[1]) < 1e-14);
  }
  CHECK_THROWS_AS(normalize(prime, 0.125, std::vector<cd>{0.0, 0.0}),
                  InvalidInput);
  CHECK_THROWS_AS(normalize(prime, 0.125, std::vector<cd>{1.0}), InvalidInput);
}

TEST_CASE("coefficients: rank check off a root") {
  CHECK_THROWS_AS(coefficients({2.0, 0, -1.0}, 1.0), RankError);
  CHECK_THROWS_AS(coefficients({4.0, 1, 1.0}, 1.0), RankError);
}

TEST_CASE("null vector residual and phase convention") {
  for (const SpectralProblem& prob :
       {SpectralProblem{2.5, 0, -1.0}, SpectralProblem{4.0, 1, -1.0},
        SpectralProblem{6.0, 2, 1.0}, SpectralProblem{6.0, 2, -1.0},
        SpectralProblem{8.5, 3, 1.5}}) {
    for (const auto& sol : find_eigenvalues(prob)) {
      CHECK(sol.residual_norm <= 1e-10 * std::sqrt(2 * pi));
      // i^{-h} K_h is real.
      cd ih = 1.0;
      for (const cd& k : sol.coefficients) {
        CHECK(std::abs((k / ih).imag()) == 0.0);
        ih *= cd(0.0, 1.0);
      }
    }
  }
}

TEST_CASE("residual of solved states") {
  for (const SpectralProblem& prob :
       {SpectralProblem{2.0, 0, -1.0}, SpectralProblem{4.0, 1, 1.0},
        SpectralProblem{1.5, 0, -2.0}, SpectralProblem{6.0, 2, -1.0}}) {
    for (const auto& sol : find_eigenvalues(prob)) {
      CAPTURE(prob.alpha);
      CAPTURE(prob.n);
      CHECK(residual(prob, sol, kSamples) < 1e-6);
    }
  }
}

TEST_CASE("residual detects a 1% energy error") {
  for (const SpectralProblem& prob :
       {SpectralProblem{2.0, 0, -1.0}, SpectralProblem{4.0, 1, 1.0}}) {
    auto sol = find_eigenvalues(prob).at(0);
    sol.energy *= 1.01;
    CHECK(residual(prob, sol, kSamples) > 1e-3);
  }
}

TEST_CASE("delta-prime second state structure") {
  // n = 2, V0 < 0 has two roots; the upper one is odd (K_0 = K_2 = 0).
  const auto roots = find_eigenvalues({6.0, 2, -1.0});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].energy > roots[1].energy);
  const auto& odd = roots[1];
  CHECK(odd.coefficients[0] == cd(0.0, 0.0));
  CHECK(odd.coefficients[2] == cd(0.0, 0.0));
  CHECK(odd.coefficients[1].imag() > 0.0);
}

TEST_CASE("scan: serial and parallel are bit-identical") {
  const auto grid = log_spaced(1e-6, 1e6, 257);
  CHECK(grid.front() == 1e-6);
  CHECK(grid.back() == 1e6);
  for (const SpectralProblem& prob :
       {SpectralProblem{1.7, 0, -1.0}, SpectralProblem{5.5, 1, 2.0},
        SpectralProblem{7.5, 3, 0.8}}) {
    CHECK(scan_determinant(prob, grid) == scan_determinant_serial(prob, grid));
  }
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 4), InvalidInput);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(validate(SpectralProblem{1.0, 0, -1.0}), DomainError);
  CHECK_THROWS_AS(validate(SpectralProblem{3.0, 1, -1.0}), DomainError);
  CHECK_THROWS_AS(validate(SpectralProblem{4.0, 1, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(SpectralProblem{4.0, -1, 1.0}), DomainError);
  CHECK_THROWS_AS(find_eigenvalues({2.0, 1, 1.0}), DomainError);
}
