#ifndef FIE_PROBLEM_HPP
#define FIE_PROBLEM_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "fie/chebyshev.hpp"

namespace fie {

/// Data of a functional-integral equation
///
///     y(t) = f(t, integral over [a,b] of k(t,s) g(s, y(s)) ds)
///
/// on the interval [a,b], with an optional known exact solution.
struct ProblemSpec {
  std::string name;
  Interval interval;
  std::function<double(double, double)> kernel;   // k(t, s)
  std::function<double(double, double)> outer_f;  // f(t, z)
  std::function<double(double, double)> inner_g;  // g(s, y)
  std::function<double(double)> exact_solution;   // may be empty

  bool has_exact() const { return static_cast<bool>(exact_solution); }
};

/// Constants of the contraction hypotheses: conjugate exponents p, q,
/// the Lipschitz constants M (for f) and L (for g), their product C,
/// and the optional growth data |f(t,x)| <= h1(t) + b1 |x|^(q/p) and
/// |g(s,z)| <= a0(s) + b0 |z|.  The growth data has no role in the
/// solver; it documents the operator's mapping conditions.
struct HypothesisData {
  double p;
  double q;
  double lipschitz_M;
  double lipschitz_L;
  double C;
  std::function<double(double)> a1_h1;
  double a1_b1 = 0.0;
  std::function<double(double)> a3_a0;
  double a3_b0 = 0.0;
};

/// Validates p in (1, inf), M > 0, L > 0 and fills q = p/(p-1), C = M*L.
HypothesisData make_hypothesis(double p, double lipschitz_M, double lipschitz_L);

/// The two built-in problems.
///
/// Example 1 on [0,1]: k(t,s) = t - s, g(s,y) = y,
/// f(t,z) = sin(z + (t-1)cos(1) + sin(1)), exact solution sin(t);
/// p = 2, M = 1, L = 1.
///
/// Example 2 on [0,1]: k(t,s) = t*s, g(s,y) = arctan(y),
/// f(t,z) = log(z - t/3 + exp(-t-1))/(t+1) + tan(t) + 1, exact tan(t);
/// p = 2, L = 1.  f has no global Lipschitz constant (the log argument
/// can reach 0); M is the documented on-solution estimate e^2/2, the
/// largest |df/dz| along the exact solution, attained at t = 1.  Note
/// the Picard iteration from y0 = 0 leaves the log domain at its first
/// step for t > 0.6035; this surfaces as a DomainError.
std::pair<ProblemSpec, HypothesisData> builtin_example(int id);

/// Applies the integral operator (Ay)(t) = f(t, integral of k(t,s) g(s,y(s)) ds)
/// with the given quadrature rule.  Evaluation failures are rethrown as
/// EvalError annotated with t.
double apply_operator(const ProblemSpec& spec,
                      const std::function<double(double)>& y,
                      const QuadratureRule& rule, double t);

/// Parses the documented key=value problem format.  Keys: name, a, b, p,
/// kernel (vars t,s), f (vars t,z), g (vars s,y), exact (optional, var t),
/// lipschitz_M, lipschitz_L.  Lines starting with '#' are comments.
std::pair<ProblemSpec, HypothesisData> load_problem(std::string_view config_text);

}  // namespace fie

#endif  // FIE_PROBLEM_HPP
