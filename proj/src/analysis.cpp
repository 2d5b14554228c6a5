#include "fie/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fie {

double ContractionReport::alpha_for_lambda(double lambda) const {
  if (!(lambda > 1.0)) throw ArgumentError("lambda must exceed 1");
  return std::pow(lambda, -1.0 / p);
}

double ContractionReport::default_lambda() const {
  if (!is_contraction) {
    throw ContractionError(
        "no admissible lambda: the contraction condition N < 1 does not hold");
  }
  return (1.0 + lambda_max) / 2.0;
}

double lp_norm(const std::function<double(double)>& fn, const Interval& interval,
               double p, const QuadratureRule& rule) {
  if (!(p >= 1.0)) throw ArgumentError("lp_norm requires p >= 1");
  (void)interval;
  const double integral =
      integrate([&](double s) { return std::pow(std::fabs(fn(s)), p); }, rule);
  return std::pow(integral, 1.0 / p);
}

double estimate_M1(const ProblemSpec& spec, const HypothesisData& hyp, double t,
                   const QuadratureRule& rule) {
  const double integral = integrate(
      [&](double s) { return std::pow(std::fabs(spec.kernel(t, s)), hyp.q); }, rule);
  return std::pow(integral, 1.0 / hyp.q);
}

ContractionReport contraction_constant(const ProblemSpec& spec,
                                       const HypothesisData& hyp,
                                       const QuadratureRule& outer_rule,
                                       const QuadratureRule& inner_rule) {
  ContractionReport report;
  report.p = hyp.p;
  report.M1_samples.reserve(outer_rule.nodes.size());
  for (double t : outer_rule.nodes) {
    report.M1_samples.emplace_back(t, estimate_M1(spec, hyp, t, inner_rule));
  }
  const double integral = integrate(
      [&](double s) {
        return std::pow(estimate_M1(spec, hyp, s, inner_rule), hyp.p);
      },
      outer_rule);
  report.N = hyp.C * std::pow(integral, 1.0 / hyp.p);
  if (!std::isfinite(report.N)) {
    throw EvalError("contraction constant N is not finite", spec.interval.a);
  }
  report.is_contraction = report.N < 1.0;
  report.lambda_max = report.N > 0.0
                          ? std::pow(report.N, -hyp.p)
                          : std::numeric_limits<double>::infinity();
  return report;
}

double bielecki_norm(const std::function<double(double)>& fn,
                     const Interval& interval, double p, double lambda,
                     const std::function<double(double)>& M1_fn,
                     const QuadratureRule& rule) {
  if (!(lambda > 1.0)) throw ArgumentError("bielecki_norm requires lambda > 1");
  if (!(p >= 1.0)) throw ArgumentError("bielecki_norm requires p >= 1");
  std::vector<double> samples(rule.nodes);
  samples.push_back(interval.b);
  double sup = 0.0;
  for (double x : samples) {
    if (!(x > interval.a)) continue;  // the partial integral vanishes at a
    const QuadratureRule partial =
        quadrature_rule(rule.point_count(), Interval(interval.a, x));
    const double weight_exponent = integrate(
        [&](double s) { return std::pow(std::fabs(M1_fn(s)), p); }, partial);
    const double partial_norm = integrate(
        [&](double s) { return std::pow(std::fabs(fn(s)), p); }, partial);
    sup = std::max(sup, std::exp(-lambda * weight_exponent) * partial_norm);
  }
  return std::pow(sup, 1.0 / p);
}

double apriori_bound(double N, double y1_norm, int n) {
  if (n < 0) throw ArgumentError("iteration count must be non-negative");
  if (!(y1_norm >= 0.0)) throw ArgumentError("y1_norm must be non-negative");
  if (!(N >= 0.0)) throw ArgumentError("N must be non-negative");
  if (N >= 1.0) {
    std::ostringstream os;
    os << "contraction violated: N = " << N << " >= 1, no a priori bound";
    throw ContractionError(os.str());
  }
  return std::pow(N, n) * y1_norm / (1.0 - N);
}

std::pair<double, double> equivalence_constants(
    const Interval& interval, double p, double lambda,
    const std::function<double(double)>& M1_fn) {
  if (!(lambda > 1.0)) throw ArgumentError("equivalence_constants requires lambda > 1");
  const int points = 64;
  const QuadratureRule rule = quadrature_rule(points, interval);
  double sup_w = 1.0;  // w(a) = 1
  double inf_w = 1.0;
  std::vector<double> samples(rule.nodes);
  samples.push_back(interval.b);
  for (double x : samples) {
    if (!(x > interval.a)) continue;
    const QuadratureRule partial = quadrature_rule(points, Interval(interval.a, x));
    const double exponent = integrate(
        [&](double s) { return std::pow(std::fabs(M1_fn(s)), p); }, partial);
    const double w = std::exp(lambda * exponent);
    sup_w = std::max(sup_w, w);
    inf_w = std::min(inf_w, w);
  }
  return {std::pow(sup_w, -1.0 / p), std::pow(inf_w, -1.0 / p)};
}

}  // namespace fie
