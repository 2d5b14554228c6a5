#include "fie/problem.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>

#include "fie/expr.hpp"

namespace fie {

HypothesisData make_hypothesis(double p, double lipschitz_M, double lipschitz_L) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ArgumentError("hypothesis exponent p must lie in (1, inf)");
  }
  if (!(lipschitz_M > 0.0) || !(lipschitz_L > 0.0)) {
    throw ArgumentError("Lipschitz constants must be positive");
  }
  HypothesisData hyp;
  hyp.p = p;
  hyp.q = p / (p - 1.0);
  hyp.lipschitz_M = lipschitz_M;
  hyp.lipschitz_L = lipschitz_L;
  hyp.C = lipschitz_M * lipschitz_L;
  return hyp;
}

std::pair<ProblemSpec, HypothesisData> builtin_example(int id) {
  if (id == 1) {
    ProblemSpec spec{
        "example1",
        Interval(0.0, 1.0),
        [](double t, double s) { return t - s; },
        [](double t, double z) {
          return std::sin(z + (t - 1.0) * std::cos(1.0) + std::sin(1.0));
        },
        [](double, double y) { return y; },
        [](double t) { return std::sin(t); },
    };
    HypothesisData hyp = make_hypothesis(2.0, 1.0, 1.0);
    hyp.a1_h1 = [](double) { return 1.0; };  // |sin| <= 1
    hyp.a1_b1 = 0.0;
    hyp.a3_a0 = [](double) { return 0.0; };  // |g(s,y)| = |y|
    hyp.a3_b0 = 1.0;
    return {std::move(spec), std::move(hyp)};
  }
  if (id == 2) {
    ProblemSpec spec{
        "example2",
        Interval(0.0, 1.0),
        [](double t, double s) { return t * s; },
        [](double t, double z) {
          const double u = z - t / 3.0 + std::exp(-t - 1.0);
          if (!(u > 0.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "log argument z - t/3 + exp(-t-1) = " << u
               << " is not positive at t = " << t << ", z = " << z;
            throw DomainError(os.str());
          }
          return std::log(u) / (t + 1.0) + std::tan(t) + 1.0;
        },
        [](double, double y) { return std::atan(y); },
        [](double t) { return std::tan(t); },
    };
    // M = e^2/2: largest |df/dz| along the exact solution (df/dz =
    // e^(t+1)/(t+1) there, increasing in t).  No global constant exists.
    HypothesisData hyp = make_hypothesis(2.0, std::exp(2.0) / 2.0, 1.0);
    hyp.a3_a0 = [](double) { return 0.0; };  // |arctan y| <= |y|
    hyp.a3_b0 = 1.0;
    return {std::move(spec), std::move(hyp)};
  }
  throw ArgumentError("no built-in example with id " + std::to_string(id) +
                      " (valid ids: 1, 2)");
}

double apply_operator(const ProblemSpec& spec,
                      const std::function<double(double)>& y,
                      const QuadratureRule& rule, double t) {
  try {
    const double inner = integrate(
        [&](double s) { return spec.kernel(t, s) * spec.inner_g(s, y(s)); }, rule);
    const double v = spec.outer_f(t, inner);
    if (!std::isfinite(v)) {
      throw EvalError("outer function returned a non-finite value", t);
    }
    return v;
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    std::ostringstream os;
    os.precision(17);
    os << e.what() << " (applying operator at t = " << t << ")";
    throw EvalError(os.str(), t);
  }
}

namespace {

double parse_number_value(const std::string& key, const std::string& value) {
  double v = 0.0;
  const char* begin = value.data();
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError("key '" + key + "': expected a number, got '" + value + "'");
  }
  return v;
}

expr::Expr parse_expr_value(const std::string& key, const std::string& value,
                            const std::vector<std::string>& vars) {
  try {
    return expr::Expr::parse(value, vars);
  } catch (const Error& e) {
    throw ArgumentError("key '" + key + "': " + e.what());
  }
}

std::string trim(std::string_view s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::pair<ProblemSpec, HypothesisData> load_problem(std::string_view config_text) {
  std::map<std::string, std::string> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= config_text.size()) {
    std::size_t nl = config_text.find('\n', start);
    if (nl == std::string_view::npos) nl = config_text.size();
    const std::string line = trim(config_text.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("line " + std::to_string(line_no) +
                          ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw ArgumentError("line " + std::to_string(line_no) + ": empty key");
    }
    if (!entries.emplace(key, value).second) {
      throw ArgumentError("duplicate key '" + key + "'");
    }
  }

  static const std::vector<std::string> known = {
      "name", "a", "b", "p", "kernel", "f", "g", "exact", "lipschitz_M", "lipschitz_L"};
  for (const auto& [key, value] : entries) {
    bool ok = false;
    for (const auto& k : known) ok = ok || k == key;
    if (!ok) throw ArgumentError("unknown key '" + key + "'");
  }
  auto require = [&](const std::string& key) -> const std::string& {
    auto it = entries.find(key);
    if (it == entries.end()) throw ArgumentError("missing key '" + key + "'");
    return it->second;
  };

  const std::string name = require("name");
  const double a = parse_number_value("a", require("a"));
  const double b = parse_number_value("b", require("b"));
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ArgumentError("invalid interval: need finite a < b, got a = " +
                        require("a") + ", b = " + require("b"));
  }
  const double p = parse_number_value("p", require("p"));
  const double lip_M = parse_number_value("lipschitz_M", require("lipschitz_M"));
  const double lip_L = parse_number_value("lipschitz_L", require("lipschitz_L"));

  auto kernel_ast = std::make_shared<expr::Expr>(
      parse_expr_value("kernel", require("kernel"), {"t", "s"}));
  auto f_ast = std::make_shared<expr::Expr>(
      parse_expr_value("f", require("f"), {"t", "z"}));
  auto g_ast = std::make_shared<expr::Expr>(
      parse_expr_value("g", require("g"), {"s", "y"}));

  ProblemSpec spec{
      name,
      Interval(a, b),
      [kernel_ast](double t, double s) {
        return kernel_ast->eval({{"t", t}, {"s", s}});
      },
      [f_ast](double t, double z) { return f_ast->eval({{"t", t}, {"z", z}}); },
      [g_ast](double s, double y) { return g_ast->eval({{"s", s}, {"y", y}}); },
      nullptr,
  };
  if (auto it = entries.find("exact"); it != entries.end()) {
    auto exact_ast =
        std::make_shared<expr::Expr>(parse_expr_value("exact", it->second, {"t"}));
    spec.exact_solution = [exact_ast](double t) {
      return exact_ast->eval({{"t", t}});
    };
  }
  return {std::move(spec), make_hypothesis(p, lip_M, lip_L)};
}

}  // namespace fie
