#include "fie/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

namespace fie {

void SolverConfig::validate() const {
  if (degree_M < 1) throw ArgumentError("degree_M must be at least 1");
  if (quad_points_N < 2) throw ArgumentError("quad_points_N must be at least 2");
  if (!(tol > 0.0)) throw ArgumentError("tol must be positive");
  if (max_iter < 1) throw ArgumentError("max_iter must be at least 1");
  if (!(residual_p >= 1.0)) throw ArgumentError("residual_p must be >= 1");
}

std::string to_string(Termination termination) {
  switch (termination) {
    case Termination::converged:
      return "converged";
    case Termination::max_iter_reached:
      return "max_iter_reached";
    case Termination::evaluation_failed:
      return "evaluation_failed";
  }
  return "unknown";
}

double iteration_residual(const std::vector<double>& c_new,
                          const std::vector<double>& c_old, double p) {
  if (c_new.size() != c_old.size()) {
    throw ArgumentError("coefficient vectors differ in length: " +
                        std::to_string(c_new.size()) + " vs " +
                        std::to_string(c_old.size()));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < c_new.size(); ++i) {
    acc += std::pow(std::fabs(c_new[i] - c_old[i]), p);
  }
  return std::pow(acc, 1.0 / p);
}

double error_vs_exact(const ChebApproximant& approx,
                      const std::function<double(double)>& exact,
                      const QuadratureRule& rule) {
  return lp_norm([&](double t) { return approx(t) - exact(t); },
                 approx.interval, 2.0, rule);
}

SolveReport picard_solve(const ProblemSpec& spec, const SolverConfig& config,
                         const HypothesisData* hyp) {
  config.validate();
  const ChebGrid grid = cheb_grid(config.degree_M, spec.interval);
  const int m = config.degree_M + 1;
  const Eigen::MatrixXd T = collocation_matrix(grid);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(T);
  const QuadratureRule inner_rule =
      quadrature_rule(config.quad_points_N, spec.interval);
  const QuadratureRule report_rule = quadrature_rule(
      std::max(2 * config.degree_M, 40), spec.interval);
  const double norm_p = hyp ? hyp->p : 2.0;

  SolveReport report{ChebApproximant{spec.interval, std::vector<double>(m, 0.0)}};
  if (config.initial) {
    std::vector<double> start_values(m);
    for (int i = 0; i < m; ++i) start_values[i] = config.initial(grid.mapped_nodes[i]);
    report.final = coeffs_from_values(start_values, grid);
  }
  if (hyp) {
    report.contraction = contraction_constant(spec, *hyp, report_rule, report_rule);
  }

  Eigen::VectorXd rhs(m);
  for (int k = 0; k < config.max_iter; ++k) {
    const ChebApproximant& current = report.final;
    try {
      for (int i = 0; i < m; ++i) {
        rhs(i) = apply_operator(spec, current, inner_rule, grid.mapped_nodes[i]);
      }
    } catch (const Error& e) {
      std::ostringstream os;
      os << e.what() << " (iteration " << k + 1 << ")";
      report.failure = os.str();
      report.termination = Termination::evaluation_failed;
      return report;
    }
    const Eigen::VectorXd solved = lu.solve(rhs);
    if (!solved.allFinite()) {
      throw Error("Picard step produced non-finite coefficients at iteration " +
                  std::to_string(k + 1));
    }
    std::vector<double> next(solved.data(), solved.data() + m);
    const double residual = iteration_residual(next, current.coeffs, config.residual_p);
    report.final.coeffs = std::move(next);
    report.residual_history.push_back(residual);
    report.iterations_run = k + 1;
    if (k == 0) {
      report.y1_norm = lp_norm(report.final, spec.interval, norm_p, report_rule);
    }
    if (spec.has_exact()) {
      report.error_history.push_back(
          error_vs_exact(report.final, spec.exact_solution, report_rule));
    }
    if (residual < config.tol) {
      report.termination = Termination::converged;
      break;
    }
    if (k + 1 == config.max_iter) {
      report.termination = Termination::max_iter_reached;
    }
  }

  if (report.contraction && report.contraction->is_contraction) {
    report.apriori_history.resize(report.iterations_run);
    for (int n = 0; n < report.iterations_run; ++n) {
      report.apriori_history[n] =
          apriori_bound(report.contraction->N, report.y1_norm, n);
    }
  }
  return report;
}

std::vector<SweepRow> quad_sweep(const ProblemSpec& spec, const SolverConfig& config,
                                 const std::vector<int>& n_iters,
                                 const std::vector<int>& N_values) {
  if (!spec.has_exact()) {
    throw ArgumentError("quad_sweep requires a problem with an exact solution");
  }
  if (N_values.empty()) throw ArgumentError("quad_sweep needs at least one N value");
  if (n_iters.empty()) throw ArgumentError("quad_sweep needs at least one iteration count");
  for (int n : n_iters) {
    if (n < 0) throw ArgumentError("iteration counts must be non-negative");
  }
  const int max_n = *std::max_element(n_iters.begin(), n_iters.end());
  const QuadratureRule report_rule =
      quadrature_rule(std::max(2 * config.degree_M, 40), spec.interval);
  const double zero_error =
      lp_norm(spec.exact_solution, spec.interval, 2.0, report_rule);

  std::vector<SweepRow> rows;
  rows.reserve(N_values.size() * n_iters.size());
  for (int N : N_values) {
    SolverConfig run = config;
    run.quad_points_N = N;
    run.max_iter = std::max(max_n, 1);
    run.tol = std::numeric_limits<double>::denorm_min();  // run every iteration
    const SolveReport report = picard_solve(spec, run);
    if (report.termination == Termination::evaluation_failed) {
      throw EvalError(report.failure, spec.interval.a);
    }
    for (int n : n_iters) {
      const double err = n == 0 ? zero_error : report.error_history.at(n - 1);
      rows.push_back({N, n, err});
    }
  }
  return rows;
}

}  // namespace fie
