#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "fie/expr.hpp"

using fie::expr::Bindings;
using fie::expr::Expr;
using fie::expr::ParseError;

TEST_CASE("parse and evaluate simple expressions") {
  const Expr diff = Expr::parse("t - s", {"t", "s"});
  CHECK(diff.eval({{"t", 5.0}, {"s", 2.0}}) == 3.0);
  CHECK(diff.same_structure(Expr::parse("t-s", {"t", "s"})));

  CHECK(Expr::parse("sin(t)", {"t"}).eval({{"t", 0.0}}) == 0.0);
  CHECK(Expr::parse("t*s", {"t", "s"}).eval({{"t", 2.0}, {"s", 3.0}}) == 6.0);
}

TEST_CASE("example formulas parse under their variable sets") {
  const Expr f1 = Expr::parse("sin(z + (t-1)*cos(1) + sin(1))", {"t", "z"});
  const double t = 0.4, z = 0.2;
  CHECK(f1.eval({{"t", t}, {"z", z}}) ==
        std::sin(z + (t - 1.0) * std::cos(1.0) + std::sin(1.0)));

  const Expr f2 = Expr::parse(
      "1/(t+1) * log(z - t/3 + exp(-t-1)) + tan(t) + 1", {"t", "z"});
  CHECK(f2.eval({{"t", 0.0}, {"z", 1.0 / 3.0}}) ==
        doctest::Approx(0.6450560919605695).epsilon(1e-15));
}

TEST_CASE("unknown identifiers are rejected at parse time") {
  try {
    Expr::parse("t + q", {"t", "s"});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(Expr::parse("foo(t)", {"t"}), ParseError);
}

TEST_CASE("syntax errors carry a byte offset") {
  try {
    Expr::parse("1 + * 2", {});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(Expr::parse("(1 + 2", {}), ParseError);
  CHECK_THROWS_AS(Expr::parse("1 2", {}), ParseError);
  CHECK_THROWS_AS(Expr::parse("", {}), ParseError);
}

TEST_CASE("operator precedence and associativity") {
  CHECK(Expr::parse("2+3*4", {}).eval({}) == 14.0);
  CHECK(Expr::parse("2^3^2", {}).eval({}) == 512.0);
  CHECK(Expr::parse("-2^2", {}).eval({}) == -4.0);
  CHECK(Expr::parse("2*-3", {}).eval({}) == -6.0);
  CHECK(Expr::parse("10 - 4 - 3", {}).eval({}) == 3.0);
  CHECK(Expr::parse("16 / 4 / 2", {}).eval({}) == 2.0);
  CHECK(Expr::parse("2^-1", {}).eval({}) == 0.5);
}

TEST_CASE("evaluation domain errors carry the sub-expression") {
  const Expr logt = Expr::parse("1 + log(t)", {"t"});
  try {
    logt.eval({{"t", -1.0}});
    FAIL("expected DomainError");
  } catch (const fie::DomainError& e) {
    CHECK(std::string(e.what()).find("log(t)") != std::string::npos);
  }
  CHECK_THROWS_AS(logt.eval({{"t", 0.0}}), fie::DomainError);
  CHECK_THROWS_AS(Expr::parse("sqrt(t)", {"t"}).eval({{"t", -4.0}}),
                  fie::DomainError);
  CHECK_THROWS_AS(Expr::parse("t^0.5", {"t"}).eval({{"t", -2.0}}),
                  fie::DomainError);
  CHECK(Expr::parse("t^2", {"t"}).eval({{"t", -2.0}}) == 4.0);
}

TEST_CASE("missing bindings are reported by name") {
  const Expr sum = Expr::parse("t + s", {"t", "s"});
  try {
    sum.eval({{"t", 1.0}});
    FAIL("expected ArgumentError");
  } catch (const fie::ArgumentError& e) {
    CHECK(std::string(e.what()).find("'s'") != std::string::npos);
  }
}

TEST_CASE("pretty printing reparses to the same tree") {
  const std::vector<std::string> cases = {
      "t - s",
      "t*s",
      "sin(z + (t-1)*cos(1) + sin(1))",
      "1/(t+1) * log(z - t/3 + exp(-t-1)) + tan(t) + 1",
      "2^3^2",
      "-(t + s) * -s",
      "(t - s) - s",
      "t - (s - 1)",
      "t / (s / 2)",
      "arctan(abs(-t))",
      "sqrt(t^2 + 1e-3)",
      "-.5*t + 0.25",
      "2^-t",
      "(t + 1)^(s + 2)",
  };
  for (const auto& text : cases) {
    CAPTURE(text);
    const Expr parsed = Expr::parse(text, {"t", "s", "z"});
    const Expr reparsed = Expr::parse(parsed.to_string(), {"t", "s", "z"});
    CHECK(parsed.same_structure(reparsed));
    CHECK(parsed.to_string() == reparsed.to_string());
  }
}

TEST_CASE("evaluation is deterministic") {
  const Expr e = Expr::parse("sin(t) * exp(s) / (t + s + 2)", {"t", "s"});
  const Bindings b{{"t", 0.7}, {"s", -0.2}};
  const double first = e.eval(b);
  for (int i = 0; i < 10; ++i) CHECK(e.eval(b) == first);
}
