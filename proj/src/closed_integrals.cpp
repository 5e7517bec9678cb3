#include "fracdelta/closed_integrals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracdelta/error.hpp"

namespace fracdelta {

void validate(const MomentQuery& q) {
  if (q.m < 0) throw DomainError("moment power must be non-negative");
  if (!(q.alpha > q.m + 1)) {
    throw DomainError("moment integral diverges: need alpha > m + 1 (alpha = " +
                      std::to_string(q.alpha) +
                      ", m = " + std::to_string(q.m) + ")");
  }
  if (!(q.energy_abs > 0.0) || !std::isfinite(q.energy_abs)) {
    throw DomainError("|E| must be positive and finite");
  }
}

double j_hat(int m, double alpha) {
  validate({m, alpha, 1.0});
  return std::numbers::pi / (alpha * std::sin(std::numbers::pi * (m + 1) / alpha));
}

double j_closed(const MomentQuery& q) {
  validate(q);
  if (q.m % 2 != 0) return 0.0;
  const double scaling = std::pow(q.energy_abs, (q.m + 1 - q.alpha) / q.alpha);
  return 2.0 * scaling * j_hat(q.m, q.alpha);
}

double m_closed(const MomentQuery& q) {
  validate(q);
  if (q.m % 2 != 0) return 0.0;
  // Written as (alpha - m - 1) / alpha so the positive sign is explicit.
  const double ratio = (q.alpha - q.m - 1) / q.alpha;
  const double scaling =
      std::pow(q.energy_abs, (q.m + 1 - 2.0 * q.alpha) / q.alpha);
  return 2.0 * scaling * ratio * j_hat(q.m, q.alpha);
}

}  // namespace fracdelta
