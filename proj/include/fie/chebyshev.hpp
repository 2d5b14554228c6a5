#ifndef FIE_CHEBYSHEV_HPP
#define FIE_CHEBYSHEV_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "fie/errors.hpp"

namespace fie {

/// A finite interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_);

  double width() const { return b - a; }
  bool contains(double t) const { return t >= a && t <= b; }

  /// Affine map [a,b] -> [-1,1].
  double to_reference(double t) const { return (2.0 * t - (a + b)) / (b - a); }
  /// Affine map [-1,1] -> [a,b].
  double from_reference(double x) const { return ((b - a) * x + (a + b)) / 2.0; }
};

/// Chebyshev extrema grid of degree M on an interval: the M+1 reference
/// nodes x_i = cos(i*pi/M) together with their affine images in [a,b].
struct ChebGrid {
  int degree;
  Interval interval;
  std::vector<double> reference_nodes;  // x_i in [-1,1], i = 0..M
  std::vector<double> mapped_nodes;     // t_i in [a,b]
};

ChebGrid cheb_grid(int degree_M, const Interval& interval);

/// Evaluates the Chebyshev polynomial T_n(x).  All three branches of the
/// definition are covered: cos(n*acos x) for |x| <= 1 and the hyperbolic
/// continuations for |x| >= 1.
double cheb_eval(int n, double x);

/// A Chebyshev series sum c_n T_n(x(t)) on an interval, evaluated by
/// backward (Clenshaw) recurrence.
struct ChebApproximant {
  Interval interval;
  std::vector<double> coeffs;  // c_0 .. c_M

  double operator()(double t) const;
};

double cheb_eval_series(const ChebApproximant& approx, double t);

/// Quadrature nodes and weights for plain-ds integrals over [a,b].
struct QuadratureRule {
  Interval interval;
  std::vector<double> nodes;
  std::vector<double> weights;

  int point_count() const { return static_cast<int>(nodes.size()); }
};

/// Clenshaw-Curtis rule at N Chebyshev points mapped to the interval.
/// Integrates every polynomial of degree <= N-1 exactly.
QuadratureRule quadrature_rule(int point_count_N, const Interval& interval);

/// Sum of w_i * fn(node_i), accumulated in ascending node index so results
/// are bit-reproducible.  Throws EvalError if fn is non-finite at a node.
double integrate(const std::function<double(double)>& fn,
                 const QuadratureRule& rule);

/// Matrix T with T(i,j) = T_j(x_i) over the grid's reference nodes.
Eigen::MatrixXd collocation_matrix(const ChebGrid& grid);

/// Solves T c = values for the series coefficients; the returned
/// approximant reproduces `values` at the grid's mapped nodes.
ChebApproximant coeffs_from_values(const std::vector<double>& values,
                                   const ChebGrid& grid);

/// n-point Gauss-Chebyshev approximation of the weighted integral
/// of fn(x) / sqrt(1 - x^2) over [-1,1].
double gauss_chebyshev_weighted_integral(const std::function<double(double)>& fn,
                                         int point_count);

/// Series coefficients of fn recovered through the orthogonality integrals
/// a_n = 2/(pi d_n) * integral of T_n(x) fn(t(x)) / sqrt(1-x^2), d_0 = 2,
/// d_n = 1 otherwise.  Cross-check path for coeffs_from_values on smooth
/// inputs; the collocation solve is the one used in the solver loop.
std::vector<double> coeffs_via_orthogonality(const std::function<double(double)>& fn,
                                             int degree_M,
                                             const Interval& interval,
                                             int quad_points);

}  // namespace fie

#endif  // FIE_CHEBYSHEV_HPP
