// fracdelta: bound states of the fractional Laplacian with a delta^(n)
// point interaction.
//
//   fracdelta solve --alpha 2 --n 0 --v0 -1
//   fracdelta eigenfunction --alpha 4 --n 1 --v0 1 --xmin -10 --xmax 10
//   fracdelta sweep-alpha --n 1 --v0 1 --alpha-min 3.1 --alpha-max 6 --steps 30
//   fracdelta validate

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fracdelta/cli.hpp"

namespace {

using fracdelta::cli::Command;
using fracdelta::cli::RunConfig;

void add_problem_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "order of the fractional Laplacian");
  sub->add_option("--n", cfg.n, "derivative order of the delta interaction");
  sub->add_option("--v0", cfg.v0, "coupling strength V0");
  sub->add_option("--tol", cfg.tol, "tolerance on reported residuals");
  sub->add_option("--out", cfg.out, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of (-Laplacian)^(alpha/2) + V0 delta^(n)"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, fracdelta::Method> methods{
      {"foxh", fracdelta::Method::FoxH},
      {"quadrature", fracdelta::Method::Quadrature}};

  auto* solve = app.add_subcommand("solve", "eigenvalues and coefficients");
  add_problem_flags(solve, cfg);

  auto* eig = app.add_subcommand("eigenfunction", "sample psi(x) on a grid");
  add_problem_flags(eig, cfg);
  eig->add_option("--xmin", cfg.x_min, "left end of the grid");
  eig->add_option("--xmax", cfg.x_max, "right end of the grid");
  eig->add_option("--points", cfg.points, "number of grid points");
  eig->add_option("--method", cfg.method, "foxh or quadrature")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

  auto* sweep = app.add_subcommand("sweep-alpha", "E_hat as a function of alpha");
  add_problem_flags(sweep, cfg);
  sweep->add_option("--alpha-min", cfg.alpha_min, "first alpha")->required();
  sweep->add_option("--alpha-max", cfg.alpha_max, "last alpha")->required();
  sweep->add_option("--steps", cfg.steps, "number of alpha values")->required();

  auto* validate = app.add_subcommand("validate", "run the oracle checks");
  validate->add_option("--tol", cfg.tol, "loosest acceptable gate");
  validate->add_option("--perturb-energy", cfg.perturb_energy,
                       "debug: relative shift of solved energies");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) cfg.command = Command::Solve;
  if (eig->parsed()) cfg.command = Command::Eigenfunction;
  if (sweep->parsed()) cfg.command = Command::SweepAlpha;
  if (validate->parsed()) cfg.command = Command::Validate;

  if (cfg.out.empty()) return fracdelta::cli::run(cfg, std::cout, std::cerr);

  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << cfg.out << " for writing\n";
    return fracdelta::cli::kExitFailure;
  }
  const int code = fracdelta::cli::run(cfg, file, std::cerr);
  file.flush();
  return file ? code : fracdelta::cli::kExitFailure;
}
