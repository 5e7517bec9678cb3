#pragma once

// Closed forms of the two moment-integral families behind the coupling
// matrix and the normalization:
//   J_m(E) = int_R q^m / (|q|^alpha + |E|)   dq
//   M_m(E) = int_R q^m / (|q|^alpha + |E|)^2 dq
// Both converge iff alpha > m + 1.

namespace fracdelta {

struct MomentQuery {
  int m = 0;
  double alpha = 2.0;
  double energy_abs = 1.0;  // |E|, strictly positive
};

/// Throws DomainError unless m >= 0, alpha > m + 1 and energy_abs > 0.
void validate(const MomentQuery& q);

/// int_0^inf w^m / (w^alpha + 1) dw = pi / (alpha sin(pi (m+1) / alpha)).
double j_hat(int m, double alpha);

double j_closed(const MomentQuery& q);
double m_closed(const MomentQuery& q);

}  // namespace fracdelta
