// Command-line front end: solve functional-integral equations, verify the
// contraction hypotheses, and emit convergence tables and quadrature sweeps.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fie/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, fie::cli::RunManifest& manifest,
                        std::string& format) {
  auto* example = cmd->add_option("--example", manifest.example_id,
                                  "Built-in problem id (1 or 2)")
                      ->check(CLI::Range(1, 2));
  auto* problem =
      cmd->add_option("--problem", manifest.problem_path, "Problem config file");
  example->excludes(problem);
  problem->excludes(example);
  cmd->add_option("--degree", manifest.solver.degree_M,
                  "Chebyshev collocation degree M")
      ->capture_default_str();
  cmd->add_option("--quad", manifest.solver.quad_points_N,
                  "Quadrature point count N")
      ->capture_default_str();
  cmd->add_option("--tol", manifest.solver.tol, "Stopping tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iter", manifest.solver.max_iter, "Iteration cap")
      ->capture_default_str();
  cmd->add_option("--p", manifest.solver.residual_p,
                  "Norm exponent of the coefficient stopping test")
      ->capture_default_str();
  cmd->add_option("--out", manifest.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for functional-integral equations y(t) = f(t, integral of "
               "k(t,s) g(s,y(s)) ds) by Chebyshev collocation and Picard iteration"};
  app.require_subcommand(1);

  fie::cli::RunManifest manifest;
  std::string format = "csv";

  auto* solve = app.add_subcommand(
      "solve", "Run the Picard iteration and write solution samples");
  auto* check = app.add_subcommand(
      "check", "Verify the contraction hypotheses (exit 3 when N >= 1)");
  auto* table = app.add_subcommand(
      "table", "Per-iteration L2 error table (requires an exact solution)");
  auto* sweep = app.add_subcommand(
      "sweep", "L2 error for several quadrature point counts");
  for (CLI::App* cmd : {solve, check, table, sweep}) {
    add_common_options(cmd, manifest, format);
  }
  sweep->add_option("--points", manifest.sweep_points,
                    "Quadrature point counts to sweep")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--iters", manifest.sweep_iters, "Iteration counts to report")
      ->delimiter(',')
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fie::cli::kExitArgumentError;
  }

  if (solve->parsed()) manifest.subcommand = fie::cli::Subcommand::solve;
  if (check->parsed()) manifest.subcommand = fie::cli::Subcommand::check;
  if (table->parsed()) manifest.subcommand = fie::cli::Subcommand::table;
  if (sweep->parsed()) manifest.subcommand = fie::cli::Subcommand::sweep;
  manifest.format = format == "json" ? fie::cli::OutputFormat::json
                                     : fie::cli::OutputFormat::csv;
  return fie::cli::run_manifest_to_path(manifest, std::cout, std::cerr);
}
