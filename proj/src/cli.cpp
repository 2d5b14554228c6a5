#include "fie/cli.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "fie/reporting.hpp"

namespace fie::cli {

namespace {

constexpr int kSampleCount = 201;

std::pair<ProblemSpec, HypothesisData> load_source(const RunManifest& manifest) {
  const bool has_example = manifest.example_id != 0;
  const bool has_path = !manifest.problem_path.empty();
  if (has_example == has_path) {
    throw ArgumentError("exactly one problem source is required: --example or --problem");
  }
  if (has_example) {
    return builtin_example(manifest.example_id);
  }
  std::ifstream in(manifest.problem_path);
  if (!in) {
    throw EvalError("cannot open problem file '" + manifest.problem_path + "'", 0.0);
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return load_problem(text.str());
  } catch (const ArgumentError& e) {
    // config-file syntax problems are evaluation failures for the CLI
    throw EvalError(std::string("bad problem file '") + manifest.problem_path +
                        "': " + e.what(),
                    0.0);
  }
}

int cmd_table(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  auto [spec, hyp] = load_source(manifest);
  if (!spec.has_exact()) {
    err << "table requires a problem with an exact solution\n";
    return kExitArgumentError;
  }
  SolverConfig config = manifest.solver;
  config.tol = std::numeric_limits<double>::denorm_min();  // run all rows
  const SolveReport report = picard_solve(spec, config, &hyp);
  if (report.termination == Termination::evaluation_failed) {
    err << report.failure << '\n';
    return kExitEvalFailure;
  }
  write_table_csv(out, report.error_history);
  return kExitOk;
}

int cmd_check(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  auto [spec, hyp] = load_source(manifest);
  (void)err;
  const QuadratureRule rule = quadrature_rule(manifest.solver.quad_points_N, spec.interval);
  const ContractionReport report = contraction_constant(spec, hyp, rule, rule);
  if (manifest.format == OutputFormat::json) {
    write_contraction_json(out, spec, report);
  } else {
    write_contraction_text(out, spec, report);
  }
  return report.is_contraction ? kExitOk : kExitNotContraction;
}

int cmd_solve(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  auto [spec, hyp] = load_source(manifest);
  const SolveReport report = picard_solve(spec, manifest.solver, &hyp);
  if (report.termination == Termination::evaluation_failed) {
    err << report.failure << '\n';
    return kExitEvalFailure;
  }
  if (manifest.format == OutputFormat::json) {
    write_solve_json(out, spec, manifest.solver, report, kSampleCount);
  } else {
    write_solve_csv(out, spec, report, kSampleCount);
  }
  return report.termination == Termination::converged ? kExitOk : kExitMaxIter;
}

int cmd_sweep(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  auto [spec, hyp] = load_source(manifest);
  if (!spec.has_exact()) {
    err << "sweep requires a problem with an exact solution\n";
    return kExitArgumentError;
  }
  if (manifest.sweep_points.empty()) {
    err << "sweep requires at least one quadrature point count\n";
    return kExitArgumentError;
  }
  const std::vector<SweepRow> rows =
      quad_sweep(spec, manifest.solver, manifest.sweep_iters, manifest.sweep_points);
  write_sweep_csv(out, rows);
  return kExitOk;
}

}  // namespace

int run_manifest(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  try {
    switch (manifest.subcommand) {
      case Subcommand::table:
        return cmd_table(manifest, out, err);
      case Subcommand::check:
        return cmd_check(manifest, out, err);
      case Subcommand::solve:
        return cmd_solve(manifest, out, err);
      case Subcommand::sweep:
        return cmd_sweep(manifest, out, err);
    }
    err << "unknown subcommand\n";
    return kExitArgumentError;
  } catch (const ArgumentError& e) {
    err << e.what() << '\n';
    return kExitArgumentError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitEvalFailure;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitEvalFailure;
  }
}

int run_manifest_to_path(const RunManifest& manifest, std::ostream& out,
                         std::ostream& err) {
  if (manifest.out_path.empty()) {
    return run_manifest(manifest, out, err);
  }
  std::ofstream file(manifest.out_path, std::ios::binary);
  if (!file) {
    err << "cannot open output file '" << manifest.out_path << "'\n";
    return kExitEvalFailure;
  }
  return run_manifest(manifest, file, err);
}

}  // namespace fie::cli
