#include "fracdelta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "fracdelta/error.hpp"

namespace fracdelta::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
// Odd indices of kKronrodNodes are the Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980880000, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double resabs;
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const {
    return l.error < r.error;
  }
};

double checked(const RealFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonConvergence("integrand is not finite at x = " +
                         std::to_string(x));
  }
  return v;
}

Segment gauss_kronrod(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = checked(f, center);

  double kronrod = f_center * kKronrodWeights[10];
  double gauss = 0.0;
  double resabs = std::abs(kronrod);
  std::array<double, 10> f_left{};
  std::array<double, 10> f_right{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double fl = checked(f, center - dx);
    const double fr = checked(f, center + dx);
    f_left[j] = fl;
    f_right[j] = fr;
    kronrod += kKronrodWeights[j] * (fl + fr);
    resabs += kKronrodWeights[j] * (std::abs(fl) + std::abs(fr));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (fl + fr);
  }

  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[10] * std::abs(f_center - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    resasc += kKronrodWeights[j] *
              (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  const double abs_half = std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  resasc *= abs_half;
  resabs *= abs_half;
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  error = std::max(error, 50.0 * kEps * resabs);
  return {a, b, kronrod * half, error, resabs};
}

QuadratureResult combine(QuadratureResult lhs, const QuadratureResult& rhs) {
  lhs.value += rhs.value;
  lhs.abs_error += rhs.abs_error;
  lhs.evaluations += rhs.evaluations;
  return lhs;
}

void require_tolerance(const Options& opt) {
  if (!(opt.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!(opt.scale > 0.0)) throw InvalidInput("scale must be positive");
}

// Repeated pairwise averaging of partial sums (Euler-Knopp transform).
double euler_average(std::vector<double> sums) {
  while (sums.size() > 1) {
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
      sums[i] = 0.5 * (sums[i] + sums[i + 1]);
    }
    sums.pop_back();
  }
  return sums.front();
}

enum class Kernel { Cos, Sin };

// 2 * int_0^inf g(p) trig(p x) dp for x > 0. Splits at the zeros of the
// trigonometric factor, sums the head directly and accelerates the
// alternating tail.
QuadratureResult oscillatory(const RealFunction& g, double x, Kernel kernel,
                             const Options& opt) {
  const double half_period = std::numbers::pi / x;
  const double offset = kernel == Kernel::Cos ? 0.5 : 1.0;
  auto zero = [&](std::size_t k) {
    return (static_cast<double>(k) + offset) * half_period;
  };
  const RealFunction integrand = [&](double p) {
    const double t = kernel == Kernel::Cos ? std::cos(p * x) : std::sin(p * x);
    return 2.0 * g(p) * t;
  };

  Options panel = opt;
  QuadratureResult total;
  auto add_panel = [&](double a, double b) {
    panel.max_evaluations = opt.max_evaluations > total.evaluations
                                ? opt.max_evaluations - total.evaluations
                                : 0;
    const QuadratureResult r = integrate_interval(integrand, a, b, panel);
    total.abs_error += r.abs_error;
    total.evaluations += r.evaluations;
    return r.value;
  };

  // Head: everything up to the first zero past the onset of the smooth
  // algebraic tail. For small x the half-period dwarfs the scale of g, so
  // geometric breakpoints from `scale` upwards keep the peak of g resolved.
  const double onset = 4.0 * opt.scale;
  std::size_t first = 0;
  while (zero(first) < onset) ++first;
  std::vector<double> cuts{0.0};
  for (std::size_t k = 0; k <= first; ++k) cuts.push_back(zero(k));
  for (double b = opt.scale; b < zero(first); b *= 4.0) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    head += add_panel(cuts[i], cuts[i + 1]);
  }

  std::vector<double> partial;
  double running = 0.0;
  std::size_t terms = 40;
  double accelerated = 0.0;
  double acceleration_error = 0.0;
  for (;;) {
    while (partial.size() < terms) {
      const std::size_t k = first + partial.size();
      running += add_panel(zero(k), zero(k + 1));
      partial.push_back(running);
    }
    accelerated = euler_average(partial);
    const double previous = euler_average(
        std::vector<double>(partial.begin(), partial.end() - 2));
    acceleration_error = std::abs(accelerated - previous);
    const double target = opt.tol * (1.0 + std::abs(head + accelerated));
    if (acceleration_error <= target) break;
    if (terms >= 2560) {
      throw NonConvergence("alternating tail did not converge");
    }
    terms *= 2;
  }

  total.value = head + accelerated;
  total.abs_error += acceleration_error;
  return total;
}

}  // namespace

QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const Options& opt) {
  require_tolerance(opt);
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw InvalidInput("integration bounds must be finite");
  }
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  Segment first = gauss_kronrod(f, a, b);
  std::size_t evaluations = 21;
  double value = first.value;
  double error = first.error;
  double resabs = first.resabs;
  heap.push(first);

  for (;;) {
    const double target =
        std::max(opt.tol * (1.0 + std::abs(value)), 100.0 * kEps * resabs);
    if (error <= target) break;
    if (evaluations + 42 > opt.max_evaluations) {
      throw NonConvergence("evaluation budget exhausted (error estimate " +
                           std::to_string(error) + ")");
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      throw NonConvergence("interval can no longer be subdivided");
    }
    heap.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    evaluations += 42;
    heap.push(left);
    heap.push(right);

    // Recompute totals from the heap occasionally to stop drift.
    if (heap.size() % 64 == 0) {
      value = error = resabs = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        resabs += copy.top().resabs;
        copy.pop();
      }
    } else {
      value += left.value + right.value - worst.value;
      error += left.error + right.error - worst.error;
      resabs += left.resabs + right.resabs - worst.resabs;
    }
  }

  if (!std::isfinite(value)) throw NonConvergence("non-finite integral");
  return {value, std::max(error, 0.0), evaluations};
}

QuadratureResult integrate_halfline(const RealFunction& f,
                                    double decay_exponent, const Options& opt) {
  require_tolerance(opt);
  if (!(decay_exponent > 1.0)) {
    throw InvalidInput("half-line integration needs decay exponent > 1, got " +
                       std::to_string(decay_exponent));
  }
  Options part = opt;
  part.tol = 0.5 * opt.tol;
  const QuadratureResult near = integrate_interval(f, 0.0, opt.scale, part);

  const RealFunction mapped = [&f](double t) {
    const double w = 1.0 / t;
    const double v = f(w);
    return v == 0.0 ? 0.0 : v * w * w;
  };
  part.max_evaluations = opt.max_evaluations - near.evaluations;
  const QuadratureResult far =
      integrate_interval(mapped, 0.0, 1.0 / opt.scale, part);
  return combine(near, far);
}

QuadratureResult integrate_fourier_cos(const RealFunction& g, double x,
                                       double decay_exponent,
                                       const Options& opt) {
  require_tolerance(opt);
  const double ax = std::abs(x);
  if (ax < 1e-12) {
    QuadratureResult r = integrate_halfline(g, decay_exponent, opt);
    r.value *= 2.0;
    r.abs_error *= 2.0;
    return r;
  }
  if (!(decay_exponent > 0.0)) {
    throw InvalidInput("Fourier integral needs a decaying amplitude");
  }
  return oscillatory(g, ax, Kernel::Cos, opt);
}

QuadratureResult integrate_fourier_sin(const RealFunction& g, double x,
                                       double decay_exponent,
                                       const Options& opt) {
  require_tolerance(opt);
  if (!(decay_exponent > 0.0)) {
    throw InvalidInput("Fourier integral needs a decaying amplitude");
  }
  const double ax = std::abs(x);
  if (ax < 1e-12) return {0.0, 0.0, 0};
  QuadratureResult r = oscillatory(g, ax, Kernel::Sin, opt);
  if (x < 0.0) r.value = -r.value;
  return r;
}

MomentResult integrate_fourier_moment(const RealFunction& g, int moment,
                                      double x, double decay_exponent,
                                      const Options& opt) {
  if (moment < 0) throw InvalidInput("moment must be non-negative");
  const double tail = decay_exponent - moment;
  if (!(tail > 0.0)) {
    throw InvalidInput("amplitude p^" + std::to_string(moment) +
                       " g(p) does not decay");
  }
  if (moment == 0) {
    return {integrate_fourier_cos(g, x, decay_exponent, opt), Parity::Even};
  }
  const RealFunction weighted = [&g, moment](double p) {
    return std::pow(p, moment) * g(p);
  };
  if (moment % 2 == 0) {
    return {integrate_fourier_cos(weighted, x, tail, opt), Parity::Even};
  }
  return {integrate_fourier_sin(weighted, x, tail, opt), Parity::Odd};
}

}  // namespace fracdelta::quad
