#ifndef FIE_SOLVER_HPP
#define FIE_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fie/analysis.hpp"
#include "fie/chebyshev.hpp"
#include "fie/problem.hpp"

namespace fie {

struct SolverConfig {
  int degree_M = 10;
  int quad_points_N = 10;
  double tol = 1e-12;
  int max_iter = 50;
  double residual_p = 2.0;  // norm exponent of the coefficient stopping test
  std::function<double(double)> initial;  // starting iterate; empty means y0 = 0

  void validate() const;
};

enum class Termination { converged, max_iter_reached, evaluation_failed };

std::string to_string(Termination termination);

struct SolveReport {
  ChebApproximant final;
  int iterations_run = 0;
  std::vector<double> residual_history;  // ||c(k+1) - c(k)||_residual_p
  std::vector<double> error_history;     // L2 error of iterate k+1 vs exact
  Termination termination = Termination::max_iter_reached;
  double y1_norm = 0.0;                  // p-norm of the first iterate
  std::vector<double> apriori_history;   // N^n y1_norm/(1-N), filled when N < 1
  std::optional<ContractionReport> contraction;
  std::string failure;                   // diagnostic when evaluation failed
};

/*
 * Collocation Picard iteration.  With y approximated by a Chebyshev series
 * of degree M and T(i,j) = T_j at node i, each step evaluates
 *
 *     F_i(c) = f(t_i, integral over [a,b] of k(t_i,s) g(s, y_M(s)) ds)
 *
 * at every collocation node and solves T c(k+1) = F(c(k)), reusing one LU
 * factorization of T.  Iteration starts from the identically-zero series
 * (or config.initial when set) and stops when the residual_p-norm of the
 * coefficient difference drops below tol or max_iter is reached.
 *
 * When the problem carries an exact solution, the L2 error of every
 * iterate is recorded through a dedicated rule with max(2M, 40) points,
 * independent of the solve's inner rule.  When hypothesis data is given,
 * the report also carries the contraction diagnostics and the a priori
 * bound history.
 */
SolveReport picard_solve(const ProblemSpec& spec, const SolverConfig& config,
                         const HypothesisData* hyp = nullptr);

/// (sum of |c_new[i] - c_old[i]|^p)^(1/p).
double iteration_residual(const std::vector<double>& c_new,
                          const std::vector<double>& c_old, double p);

/// L2 norm of (approx - exact) under the rule.
double error_vs_exact(const ChebApproximant& approx,
                      const std::function<double(double)>& exact,
                      const QuadratureRule& rule);

struct SweepRow {
  int quad_points;
  int iteration;
  double l2_error;
};

/// L2 error after n iterations for every (N, n) in N_values x n_iters,
/// row-major by N then n.  Requires an exact solution; n = 0 rows report
/// the error of the zero iterate.
std::vector<SweepRow> quad_sweep(const ProblemSpec& spec, const SolverConfig& config,
                                 const std::vector<int>& n_iters,
                                 const std::vector<int>& N_values);

}  // namespace fie

#endif  // FIE_SOLVER_HPP
