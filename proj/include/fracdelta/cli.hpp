#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "fracdelta/foxh.hpp"

namespace fracdelta::cli {

enum class Command { Solve, Eigenfunction, SweepAlpha, Validate };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNoBoundState = 2;

struct RunConfig {
  Command command = Command::Solve;
  std::optional<double> alpha;
  int n = 0;
  std::optional<double> v0;
  double x_min = -10.0;
  double x_max = 10.0;
  std::size_t points = 2001;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::size_t steps = 0;
  std::string out;  // empty: stdout
  double tol = 1e-10;
  Method method = Method::Quadrature;
  /// Debug only: relative shift applied to solved energies before the
  /// residual checks of `validate`.
  double perturb_energy = 0.0;
};

/// Empty string if cfg is usable for its command, else a message for the
/// user.
std::string check_config(const RunConfig& cfg);

/// 17 significant digits, shortest exponent form as printf %.17g.
std::string format_number(double value);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eigenfunction(const RunConfig& cfg, std::ostream& out,
                      std::ostream& err);
int cmd_sweep_alpha(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// check_config, then dispatch on cfg.command.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fracdelta::cli
