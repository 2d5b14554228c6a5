#ifndef FIE_ANALYSIS_HPP
#define FIE_ANALYSIS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "fie/chebyshev.hpp"
#include "fie/problem.hpp"

namespace fie {

/// Raised when an operation requires the contraction condition N < 1
/// and it does not hold.
class ContractionError : public Error {
 public:
  explicit ContractionError(const std::string& what) : Error(what) {}
};

/// Numerical verification of the contraction condition
///     N^p = C^p * integral over [a,b] of [M1(s)]^p ds < 1,  C = M*L.
struct ContractionReport {
  double N = 0.0;
  bool is_contraction = false;
  std::vector<std::pair<double, double>> M1_samples;  // (t, M1(t))
  double lambda_max = 0.0;  // exclusive upper bound 1/N^p on admissible lambda
  double p = 2.0;

  /// Contraction factor of the operator in the lambda-weighted norm.
  double alpha_for_lambda(double lambda) const;
  /// Midpoint of the admissible interval (1, 1/N^p); requires N < 1.
  double default_lambda() const;
};

/// (integral of |fn|^p ds)^(1/p) approximated with the rule.
double lp_norm(const std::function<double(double)>& fn, const Interval& interval,
               double p, const QuadratureRule& rule);

/// Tight kernel bound M1(t) = (integral of |k(t,s)|^q ds)^(1/q).
double estimate_M1(const ProblemSpec& spec, const HypothesisData& hyp, double t,
                   const QuadratureRule& rule);

/// N = C * (integral of [M1(s)]^p ds)^(1/p); M1 is evaluated with the
/// inner rule and the outer integral with the outer rule, whose nodes
/// also provide the M1 samples of the report.
ContractionReport contraction_constant(const ProblemSpec& spec,
                                       const HypothesisData& hyp,
                                       const QuadratureRule& outer_rule,
                                       const QuadratureRule& inner_rule);

/// Weighted norm (sup over x of w(x)^-1 * integral over [a,x] of |fn|^p)^(1/p)
/// with weight w(x) = exp(lambda * integral over [a,x] of [M1(s)]^p ds).
/// The sup is discretized over the rule's nodes plus the endpoint b.
double bielecki_norm(const std::function<double(double)>& fn,
                     const Interval& interval, double p, double lambda,
                     const std::function<double(double)>& M1_fn,
                     const QuadratureRule& rule);

/// A priori error bound N^n * y1_norm / (1 - N) after n successive
/// approximations.  Throws ContractionError if N >= 1.
double apriori_bound(double N, double y1_norm, int n);

/// Constants (c1, c2) of the norm equivalence
///     c1 ||u||_p <= ||u||_{p,w} <= c2 ||u||_p,
/// c1 = (sup w)^(-1/p), c2 = (inf w)^(-1/p) over sampled x.
std::pair<double, double> equivalence_constants(
    const Interval& interval, double p, double lambda,
    const std::function<double(double)>& M1_fn);

}  // namespace fie

#endif  // FIE_ANALYSIS_HPP
