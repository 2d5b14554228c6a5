#include "fie/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fie {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ArgumentError("interval endpoints must be finite");
  }
  if (!(a < b)) {
    throw ArgumentError("invalid interval: a = " + fmt(a) +
                        " must be less than b = " + fmt(b));
  }
}

ChebGrid cheb_grid(int degree_M, const Interval& interval) {
  if (degree_M < 1) {
    throw ArgumentError("collocation grid needs degree M >= 1, got " +
                        std::to_string(degree_M));
  }
  ChebGrid grid{degree_M, interval, {}, {}};
  grid.reference_nodes.reserve(degree_M + 1);
  grid.mapped_nodes.reserve(degree_M + 1);
  for (int i = 0; i <= degree_M; ++i) {
    const double x = std::cos(i * std::numbers::pi / degree_M);
    grid.reference_nodes.push_back(x);
    grid.mapped_nodes.push_back(interval.from_reference(x));
  }
  return grid;
}

double cheb_eval(int n, double x) {
  if (n < 0) throw ArgumentError("Chebyshev degree must be non-negative");
  if (x >= 1.0) {
    return std::cosh(n * std::acosh(x));
  }
  if (x <= -1.0) {
    const double v = std::cosh(n * std::acosh(-x));
    return (n % 2 == 0) ? v : -v;
  }
  return std::cos(n * std::acos(x));
}

namespace {

// Clenshaw backward recurrence for sum c_n T_n(x).
double clenshaw(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    const double next = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = next;
  }
  return x * b1 - b2 + c[0];
}

}  // namespace

double ChebApproximant::operator()(double t) const {
  return cheb_eval_series(*this, t);
}

double cheb_eval_series(const ChebApproximant& approx, double t) {
  if (!approx.interval.contains(t)) {
    throw DomainError("evaluation point " + fmt(t) + " outside [" +
                      fmt(approx.interval.a) + ", " + fmt(approx.interval.b) + "]");
  }
  return clenshaw(approx.coeffs, approx.interval.to_reference(t));
}

QuadratureRule quadrature_rule(int point_count_N, const Interval& interval) {
  if (point_count_N < 2) {
    throw ArgumentError("quadrature rule needs at least 2 points, got " +
                        std::to_string(point_count_N));
  }
  const int n = point_count_N - 1;  // panel count
  QuadratureRule rule{interval, {}, {}};
  rule.nodes.resize(point_count_N);
  rule.weights.resize(point_count_N);
  const double half_width = interval.width() / 2.0;
  for (int i = 0; i <= n; ++i) {
    const double theta = i * std::numbers::pi / n;
    rule.nodes[i] = interval.from_reference(std::cos(theta));
    // Clenshaw-Curtis weight at node i on [-1,1].
    double sum = 0.0;
    for (int j = 1; j <= n / 2; ++j) {
      const double bj = (2 * j == n) ? 1.0 : 2.0;
      sum += bj * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
    }
    const double ci = (i == 0 || i == n) ? 1.0 : 2.0;
    rule.weights[i] = ci / n * (1.0 - sum) * half_width;
  }
  return rule;
}

double integrate(const std::function<double(double)>& fn,
                 const QuadratureRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = fn(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw EvalError("integrand is not finite at node " + fmt(rule.nodes[i]),
                      rule.nodes[i]);
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

Eigen::MatrixXd collocation_matrix(const ChebGrid& grid) {
  const int m = grid.degree + 1;
  Eigen::MatrixXd T(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      T(i, j) = cheb_eval(j, grid.reference_nodes[i]);
    }
  }
  return T;
}

ChebApproximant coeffs_from_values(const std::vector<double>& values,
                                   const ChebGrid& grid) {
  const int m = grid.degree + 1;
  if (static_cast<int>(values.size()) != m) {
    throw ArgumentError("expected " + std::to_string(m) + " node values, got " +
                        std::to_string(values.size()));
  }
  const Eigen::MatrixXd T = collocation_matrix(grid);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) rhs(i) = values[i];
  const Eigen::VectorXd c = T.partialPivLu().solve(rhs);
  const double residual = (T * c - rhs).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  if (!c.allFinite() || residual > 1e-8 * scale) {
    throw Error("collocation system solve failed (residual " + fmt(residual) +
                "); this indicates a bug, the matrix is invertible for valid grids");
  }
  ChebApproximant approx{grid.interval, std::vector<double>(m)};
  for (int i = 0; i < m; ++i) approx.coeffs[i] = c(i);
  return approx;
}

double gauss_chebyshev_weighted_integral(const std::function<double(double)>& fn,
                                         int point_count) {
  if (point_count < 1) {
    throw ArgumentError("Gauss-Chebyshev rule needs at least 1 point");
  }
  double acc = 0.0;
  for (int j = 0; j < point_count; ++j) {
    const double x = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * point_count));
    acc += fn(x);
  }
  return acc * std::numbers::pi / point_count;
}

std::vector<double> coeffs_via_orthogonality(const std::function<double(double)>& fn,
                                             int degree_M,
                                             const Interval& interval,
                                             int quad_points) {
  std::vector<double> coeffs(degree_M + 1);
  for (int k = 0; k <= degree_M; ++k) {
    const double dk = (k == 0) ? 2.0 : 1.0;
    const double integral = gauss_chebyshev_weighted_integral(
        [&](double x) { return cheb_eval(k, x) * fn(interval.from_reference(x)); },
        quad_points);
    coeffs[k] = 2.0 / (std::numbers::pi * dk) * integral;
  }
  return coeffs;
}

}  // namespace fie
