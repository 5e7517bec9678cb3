#pragma once

#include <stdexcept>
#include <string>

namespace fracdelta {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input (non-positive tolerance, insufficient decay, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the region where the integral or operator exists.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not reach the requested tolerance within its budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at (or numerically on top of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// No vertical line separates the left and right pole families.
class ContourError : public Error {
 public:
  using Error::Error;
};

/// Null space of A(E) - I is not one-dimensional.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Root refinement stalled or a root failed its consistency checks.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracdelta
