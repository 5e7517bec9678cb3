#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fracdelta/closed_integrals.hpp"
#include "fracdelta/error.hpp"
#include "oracles.hpp"

using namespace fracdelta;
using std::numbers::pi;

namespace {

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// int_R q^m / (|q|^a + E)^k by the Simpson oracle (odd m vanish by symmetry
// of the integrand, which is not used: the sum of both half-lines is taken).
double moment_oracle(int m, double alpha, double e, int power) {
  const auto f = [=](double q) {
    return std::pow(q, m) / std::pow(std::pow(q, alpha) + e, power);
  };
  const double right = oracle::halfline(f, 1e-13);
  return right + (m % 2 == 0 ? right : -right);
}

}  // namespace

TEST_CASE("j_closed examples") {
  CHECK(rel(j_closed({0, 2.0, 1.0}), pi) < 1e-15);
  CHECK(j_closed({1, 4.0, 7.3}) == 0.0);
  CHECK(rel(j_closed({2, 4.0, 1.0}), 2.2214414690791831) < 1e-15);
  CHECK(rel(j_closed({0, 4.0, 16.0}), pi / (8.0 * std::sqrt(2.0))) < 1e-14);
  CHECK(rel(j_closed({0, 2.5, 1.0}), 2.6426127993552993) < 1e-15);
}

TEST_CASE("m_closed examples") {
  CHECK(rel(m_closed({0, 2.0, 1.0}), pi / 2) < 1e-15);
  CHECK(m_closed({3, 9.0, 2.0}) == 0.0);
  CHECK(rel(m_closed({0, 4.0, 1.0}), 3.0 * pi / (4.0 * std::sqrt(2.0))) <
        1e-15);
  CHECK(rel(m_closed({0, 2.0, 0.25}), 4.0 * pi) < 1e-14);
}

TEST_CASE("closed forms match quadrature on the validity grid") {
  for (int m = 0; m <= 2; ++m) {
    for (double alpha : {1.5, 2.0, 2.5, 3.5, 4.0, 5.5}) {
      if (!(alpha > m + 1)) continue;
      for (double e : {0.1, 1.0, 10.0}) {
        CAPTURE(m);
        CAPTURE(alpha);
        CAPTURE(e);
        const double j = j_closed({m, alpha, e});
        const double mm = m_closed({m, alpha, e});
        if (m % 2) {
          CHECK(j == 0.0);
          CHECK(mm == 0.0);
          continue;
        }
        CHECK(rel(j, moment_oracle(m, alpha, e, 1)) < 1e-8);
        CHECK(rel(mm, moment_oracle(m, alpha, e, 2)) < 1e-8);
      }
    }
  }
}

TEST_CASE("scaling law in |E|") {
  for (int m : {0, 2}) {
    for (double alpha : {3.5, 5.5}) {
      const double base = j_closed({m, alpha, 1.0});
      for (double e : {1e-3, 0.37, 42.0}) {
        const double want = std::pow(e, (m + 1.0 - alpha) / alpha) * base;
        CHECK(rel(j_closed({m, alpha, e}), want) < 1e-14);
      }
    }
  }
}

TEST_CASE("dJ/d|E| = -M") {
  // d/dE int 1/(q^a+E) = -int 1/(q^a+E)^2, checked by central differences.
  for (int m : {0, 2}) {
    for (double alpha : {3.5, 4.0, 5.5}) {
      const double e = 0.7;
      const double h = 1e-5 * e;
      const double fd =
          (j_closed({m, alpha, e + h}) - j_closed({m, alpha, e - h})) / (2 * h);
      CHECK(rel(-fd, m_closed({m, alpha, e})) < 1e-8);
    }
  }
}

TEST_CASE("finite everywhere inside the domain") {
  for (int m = 0; m <= 4; ++m) {
    for (double excess : {1e-9, 1e-3, 0.5, 3.0}) {
      const double alpha = m + 1 + excess;
      CHECK(std::isfinite(j_closed({m, alpha, 1.0})));
      CHECK(std::isfinite(m_closed({m, alpha, 1.0})));
      CHECK(j_hat(m, alpha) > 0.0);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(j_closed({1, 2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(j_closed({0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(m_closed({0, 2.0, 0.0}), DomainError);
  CHECK_THROWS_AS(m_closed({0, 2.0, -1.0}), DomainError);
  CHECK_THROWS_AS(j_closed({-1, 2.0, 1.0}), DomainError);
}
