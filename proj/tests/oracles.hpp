#pragma once

// Brute-force reference integrators used only by the tests. They share no
// code with the library quadrature: composite Simpson with Richardson
// refinement instead of Gauss-Kronrod, and Wynn's epsilon algorithm instead
// of Euler averaging for alternating tails.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

inline double simpson(const Fn& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// Simpson on [a, b], doubling the panel count until two successive
/// Richardson-corrected values agree to `tol` (relative).
inline double refine(const Fn& f, double a, double b, double tol = 1e-12,
                     int start = 64) {
  double prev = simpson(f, a, b, start);
  double prev_rich = prev;
  for (int n = 2 * start; n <= (1 << 22); n *= 2) {
    const double cur = simpson(f, a, b, n);
    const double rich = cur + (cur - prev) / 15.0;
    if (std::abs(rich - prev_rich) <= tol * std::max(1.0, std::abs(rich))) {
      return rich;
    }
    prev = cur;
    prev_rich = rich;
  }
  return prev_rich;
}

/// int_0^inf f(w) dw for f = O(w^-d), d > 1.25. Split at 1; the head is
/// graded with w = v^2 and the tail mapped by w = u^-4, which turns the
/// algebraic tail into a vanishing power u^{4d-5} at u = 0.
inline double halfline(const Fn& f, double tol = 1e-12) {
  const Fn head = [&](double v) { return 2.0 * v * f(v * v); };
  const Fn tail = [&](double u) {
    if (u == 0.0) return 0.0;
    const double u2 = u * u;
    return f(1.0 / (u2 * u2)) * 4.0 / (u2 * u2 * u);
  };
  return refine(head, 0.0, 1.0, tol) + refine(tail, 0.0, 1.0, tol);
}

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// even-column estimate whose last two entries agree best.
inline double wynn(const std::vector<double>& sums) {
  std::vector<double> prev(sums.size() + 1, 0.0);  // eps_{-1}
  std::vector<double> cur = sums;                  // eps_0
  double best = sums.back();
  double best_gap = std::abs(sums.back() - sums[sums.size() - 2]);
  for (int k = 1; cur.size() > 2; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return cur[i];
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && cur.size() >= 2) {
      const double gap = std::abs(cur.back() - cur[cur.size() - 2]);
      if (!std::isfinite(gap)) break;
      if (gap < best_gap) {
        best_gap = gap;
        best = cur.back();
      }
    }
  }
  return best;
}

/// 2 int_0^inf g(p) cos(p x) dp: Simpson per half-period between zeros of
/// cos(p x), Wynn-accelerated.
inline double fourier_cos(const Fn& g, double x, int terms = 30) {
  const double half = std::numbers::pi / x;
  const Fn f = [&](double p) { return 2.0 * g(p) * std::cos(p * x); };
  double sum = refine(f, 0.0, 0.5 * half, 1e-13);
  std::vector<double> sums;
  for (int k = 0; k < terms; ++k) {
    sum += refine(f, (k + 0.5) * half, (k + 1.5) * half, 1e-13, 32);
    sums.push_back(sum);
  }
  return wynn(sums);
}

/// 2 int_0^inf g(p) sin(p x) dp, same scheme.
inline double fourier_sin(const Fn& g, double x, int terms = 30) {
  const double half = std::numbers::pi / x;
  const Fn f = [&](double p) { return 2.0 * g(p) * std::sin(p * x); };
  double sum = refine(f, 0.0, half, 1e-13);
  std::vector<double> sums;
  for (int k = 1; k <= terms; ++k) {
    sum += refine(f, k * half, (k + 1) * half, 1e-13, 32);
    sums.push_back(sum);
  }
  return wynn(sums);
}

}  // namespace oracle
