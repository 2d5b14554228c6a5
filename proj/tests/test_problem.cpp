#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <doctest.h>

#include "fie/analysis.hpp"
#include "fie/problem.hpp"

using namespace fie;

namespace {

const char* kExample1Config = R"(# Example 1
name = example1
a = 0
b = 1
p = 2
kernel = t - s
f = sin(z + (t-1)*cos(1) + sin(1))
g = y
exact = sin(t)
lipschitz_M = 1
lipschitz_L = 1
)";

ChebApproximant random_approximant(std::mt19937& rng, const Interval& iv, int degree) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ChebApproximant approx{iv, std::vector<double>(degree + 1)};
  for (int k = 0; k <= degree; ++k) {
    approx.coeffs[k] = dist(rng) / (1.0 + k * k);  // smooth-ish decay
  }
  return approx;
}

}  // namespace

TEST_CASE("hypothesis data validation") {
  const HypothesisData hyp = make_hypothesis(2.0, 3.0, 0.5);
  CHECK(hyp.q == doctest::Approx(2.0));
  CHECK(1.0 / hyp.p + 1.0 / hyp.q == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hyp.C == doctest::Approx(1.5));
  const HypothesisData h3 = make_hypothesis(3.0, 1.0, 1.0);
  CHECK(h3.q == doctest::Approx(1.5));
  CHECK_THROWS_AS(make_hypothesis(1.0, 1.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(make_hypothesis(2.0, 0.0, 1.0), ArgumentError);
}

TEST_CASE("built-in examples") {
  auto [ex1, hyp1] = builtin_example(1);
  CHECK(ex1.exact_solution(0.0) == 0.0);
  CHECK(ex1.kernel(0.7, 0.2) == doctest::Approx(0.5));
  CHECK(ex1.inner_g(0.3, -2.5) == -2.5);
  CHECK(hyp1.p == 2.0);
  CHECK(hyp1.C == 1.0);
  CHECK(hyp1.a1_h1(0.4) == 1.0);
  CHECK(hyp1.a3_b0 == 1.0);

  auto [ex2, hyp2] = builtin_example(2);
  CHECK(ex2.kernel(0.5, 0.4) == doctest::Approx(0.2));
  CHECK(ex2.inner_g(0.1, 1.0) == doctest::Approx(std::numbers::pi / 4.0));
  CHECK(ex2.exact_solution(1.0) == doctest::Approx(std::tan(1.0)));
  CHECK(hyp2.lipschitz_L == 1.0);
  CHECK(hyp2.lipschitz_M == doctest::Approx(std::exp(2.0) / 2.0));

  CHECK_THROWS_AS(builtin_example(3), ArgumentError);
  CHECK_THROWS_AS(builtin_example(0), ArgumentError);
}

TEST_CASE("example 2 outer function leaves the log domain below z = t/3 - exp(-t-1)") {
  auto [ex2, hyp2] = builtin_example(2);
  CHECK(ex2.outer_f(0.0, 0.0) == doctest::Approx(0.0));  // log(e^-1) + 0 + 1
  CHECK_THROWS_AS(ex2.outer_f(1.0, 0.0), DomainError);   // -1/3 + e^-2 < 0
}

TEST_CASE("apply_operator at the zero function") {
  auto [spec, hyp] = builtin_example(1);
  const QuadratureRule rule = quadrature_rule(12, spec.interval);
  const auto zero = [](double) { return 0.0; };
  CHECK(apply_operator(spec, zero, rule, 1.0) ==
        doctest::Approx(0.7456241416655579).epsilon(1e-14));
  CHECK(apply_operator(spec, zero, rule, 0.0) ==
        doctest::Approx(0.2966364862301391).epsilon(1e-14));
}

TEST_CASE("the exact solutions are fixed points of the operator") {
  for (int id : {1, 2}) {
    CAPTURE(id);
    auto [spec, hyp] = builtin_example(id);
    const QuadratureRule rule = quadrature_rule(20, spec.interval);
    const ChebGrid grid = cheb_grid(10, spec.interval);
    double worst = 0.0;
    for (double t : grid.mapped_nodes) {
      const double residual =
          apply_operator(spec, spec.exact_solution, rule, t) - spec.exact_solution(t);
      worst = std::max(worst, std::fabs(residual));
    }
    CHECK(worst <= 1e-8);
  }
  // spot value: A(sin) = sin for Example 1
  auto [spec, hyp] = builtin_example(1);
  const QuadratureRule rule = quadrature_rule(12, spec.interval);
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    CHECK(apply_operator(spec, spec.exact_solution, rule, t) ==
          doctest::Approx(std::sin(t)).epsilon(1e-9));
  }
}

TEST_CASE("apply_operator annotates evaluation failures with t") {
  auto [spec, hyp] = builtin_example(2);
  const QuadratureRule rule = quadrature_rule(10, spec.interval);
  try {
    apply_operator(spec, [](double) { return 0.0; }, rule, 1.0);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.location() == 1.0);
    CHECK(std::string(e.what()).find("log") != std::string::npos);
  }
}

TEST_CASE("growth conditions of the inner functions") {
  auto [ex1, h1] = builtin_example(1);
  auto [ex2, h2] = builtin_example(2);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ys(-50.0, 50.0);
  std::uniform_real_distribution<double> ss(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double s = ss(rng);
    const double y = ys(rng);
    CHECK(std::fabs(ex1.inner_g(s, y)) == std::fabs(y));
    CHECK(std::fabs(ex2.inner_g(s, y)) <=
          std::min(std::numbers::pi / 2.0, std::fabs(y)) + 1e-15);
  }
}

TEST_CASE("operator is Lipschitz with the contraction constant for Example 1") {
  auto [spec, hyp] = builtin_example(1);
  const QuadratureRule inner = quadrature_rule(20, spec.interval);
  const QuadratureRule norm_rule = quadrature_rule(40, spec.interval);
  const double N =
      contraction_constant(spec, hyp, norm_rule, norm_rule).N;
  std::mt19937 rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    const ChebApproximant y1 = random_approximant(rng, spec.interval, 8);
    const ChebApproximant y2 = random_approximant(rng, spec.interval, 8);
    const double lhs = lp_norm(
        [&](double t) {
          return apply_operator(spec, y1, inner, t) -
                 apply_operator(spec, y2, inner, t);
        },
        spec.interval, 2.0, norm_rule);
    const double rhs = lp_norm([&](double t) { return y1(t) - y2(t); },
                               spec.interval, 2.0, norm_rule);
    CHECK(lhs <= N * rhs + 1e-8);
  }
}

TEST_CASE("config-backed Example 1 matches the native one") {
  auto [native, native_hyp] = builtin_example(1);
  auto [loaded, loaded_hyp] = load_problem(kExample1Config);
  CHECK(loaded.name == "example1");
  CHECK(loaded_hyp.p == native_hyp.p);
  CHECK(loaded_hyp.C == native_hyp.C);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> ys(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double t = unit(rng);
    const double s = unit(rng);
    const double y = ys(rng);
    CHECK(std::fabs(loaded.kernel(t, s) - native.kernel(t, s)) <= 1e-15);
    CHECK(std::fabs(loaded.outer_f(t, y) - native.outer_f(t, y)) <= 1e-15);
    CHECK(std::fabs(loaded.inner_g(s, y) - native.inner_g(s, y)) <= 1e-15);
    CHECK(std::fabs(loaded.exact_solution(t) - native.exact_solution(t)) <= 1e-15);
  }
}

TEST_CASE("config parsing failures") {
  CHECK_THROWS_WITH_AS(load_problem("name = x\na = 0\nb = 1\np = 2\n"
                                    "f = z\ng = y\nlipschitz_M = 1\nlipschitz_L = 1\n"),
                       doctest::Contains("missing key 'kernel'"), ArgumentError);
  CHECK_THROWS_WITH_AS(
      load_problem("name = x\na = 1\nb = 0\np = 2\nkernel = t*s\n"
                   "f = z\ng = y\nlipschitz_M = 1\nlipschitz_L = 1\n"),
      doctest::Contains("invalid interval"), ArgumentError);
  CHECK_THROWS_WITH_AS(
      load_problem("name = x\na = 0\nb = 1\np = 2\nkernel = t*q\n"
                   "f = z\ng = y\nlipschitz_M = 1\nlipschitz_L = 1\n"),
      doctest::Contains("key 'kernel'"), ArgumentError);
  CHECK_THROWS_WITH_AS(load_problem("a = 0\na = 1\n"),
                       doctest::Contains("duplicate key 'a'"), ArgumentError);
  CHECK_THROWS_WITH_AS(load_problem("wibble = 3\n"),
                       doctest::Contains("unknown key 'wibble'"), ArgumentError);
  CHECK_THROWS_WITH_AS(load_problem("a 0\n"), doctest::Contains("key = value"),
                       ArgumentError);
}

TEST_CASE("config without exact solution loads") {
  auto [spec, hyp] = load_problem(
      "name = bare\na = 0\nb = 2\np = 2\nkernel = 0\n"
      "f = z + t\ng = y\nlipschitz_M = 1\nlipschitz_L = 1\n");
  CHECK_FALSE(spec.has_exact());
  CHECK(spec.kernel(0.3, 0.9) == 0.0);
  CHECK(spec.outer_f(0.5, 2.0) == 2.5);
}
