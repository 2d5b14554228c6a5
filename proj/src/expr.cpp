#include "fie/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>

namespace fie::expr {

Bindings::Bindings(std::initializer_list<std::pair<std::string, double>> vars) {
  for (const auto& [name, value] : vars) set(name, value);
}

void Bindings::set(std::string name, double value) {
  for (auto& [n, v] : vars_) {
    if (n == name) {
      v = value;
      return;
    }
  }
  vars_.emplace_back(std::move(name), value);
}

double Bindings::get(std::string_view name) const {
  for (const auto& [n, v] : vars_) {
    if (n == name) return v;
  }
  throw ArgumentError("no binding for variable '" + std::string(name) + "'");
}

enum class Kind { number, variable, negate, binary, call };

struct Node {
  Kind kind;
  double number = 0.0;
  std::string name;  // variable or function name
  char op = 0;       // + - * / ^
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;  // unset for negate/call
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

const std::array<std::string_view, 8> kFunctions = {
    "sin", "cos", "tan", "arctan", "exp", "log", "sqrt", "abs"};

bool is_function(std::string_view name) {
  for (auto f : kFunctions) {
    if (f == name) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  NodePtr run() {
    auto node = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return node;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  char peek_op(std::string_view set) {
    skip_ws();
    if (pos_ < text_.size() && set.find(text_[pos_]) != std::string_view::npos) {
      return text_[pos_];
    }
    return 0;
  }

  NodePtr parse_sum() {
    auto lhs = parse_product();
    while (char op = peek_op("+-")) {
      ++pos_;
      auto rhs = parse_product();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr parse_product() {
    auto lhs = parse_unary();
    while (char op = peek_op("*/")) {
      ++pos_;
      auto rhs = parse_unary();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      auto node = std::make_shared<Node>();
      node->kind = Kind::negate;
      node->lhs = parse_unary();
      return node;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (accept('^')) {
      // right-associative; the exponent may carry its own unary minus
      auto exponent = parse_unary();
      return make_binary('^', std::move(base), std::move(exponent));
    }
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier();
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) {
      throw ParseError("malformed number", pos_);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    auto node = std::make_shared<Node>();
    node->kind = Kind::number;
    node->number = value;
    return node;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (!is_function(name)) {
        throw ParseError("unknown function '" + name + "'", start);
      }
      ++pos_;
      auto arg = parse_sum();
      expect(')');
      auto node = std::make_shared<Node>();
      node->kind = Kind::call;
      node->name = name;
      node->lhs = std::move(arg);
      return node;
    }
    bool known = false;
    for (const auto& v : vars_) {
      if (v == name) known = true;
    }
    if (!known) {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::variable;
    node->name = name;
    return node;
  }

  static NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::binary;
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

int precedence(const Node& node) {
  switch (node.kind) {
    case Kind::binary:
      if (node.op == '+' || node.op == '-') return 1;
      if (node.op == '*' || node.op == '/') return 2;
      return 4;  // ^
    case Kind::negate:
      return 3;
    default:
      return 5;
  }
}

void print(const Node& node, std::string& out) {
  auto child = [&](const Node& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (node.kind) {
    case Kind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", node.number);
      out += buf;
      break;
    }
    case Kind::variable:
      out += node.name;
      break;
    case Kind::negate:
      out += '-';
      child(*node.lhs, precedence(*node.lhs) < precedence(node));
      break;
    case Kind::call:
      out += node.name;
      out += '(';
      print(*node.lhs, out);
      out += ')';
      break;
    case Kind::binary: {
      const int prec = precedence(node);
      // left-associative except ^, so the right operand of - / and the
      // left operand of ^ need parens on ties
      const bool lhs_parens = precedence(*node.lhs) < prec ||
                              (node.op == '^' && precedence(*node.lhs) <= prec);
      bool rhs_parens = precedence(*node.rhs) < prec;
      if ((node.op == '-' || node.op == '/') && precedence(*node.rhs) == prec) {
        rhs_parens = true;
      }
      child(*node.lhs, lhs_parens);
      out += ' ';
      out += node.op;
      out += ' ';
      child(*node.rhs, rhs_parens);
      break;
    }
  }
}

std::string describe(const Node& node) {
  std::string out;
  print(node, out);
  return out;
}

double eval_node(const Node& node, const Bindings& bindings) {
  switch (node.kind) {
    case Kind::number:
      return node.number;
    case Kind::variable:
      return bindings.get(node.name);
    case Kind::negate:
      return -eval_node(*node.lhs, bindings);
    case Kind::call: {
      const double arg = eval_node(*node.lhs, bindings);
      if (node.name == "sin") return std::sin(arg);
      if (node.name == "cos") return std::cos(arg);
      if (node.name == "tan") return std::tan(arg);
      if (node.name == "arctan") return std::atan(arg);
      if (node.name == "exp") return std::exp(arg);
      if (node.name == "abs") return std::fabs(arg);
      if (node.name == "log") {
        if (!(arg > 0.0)) {
          throw DomainError("log of non-positive value in '" + describe(node) + "'");
        }
        return std::log(arg);
      }
      // sqrt
      if (arg < 0.0) {
        throw DomainError("sqrt of negative value in '" + describe(node) + "'");
      }
      return std::sqrt(arg);
    }
    case Kind::binary: {
      const double lhs = eval_node(*node.lhs, bindings);
      const double rhs = eval_node(*node.rhs, bindings);
      switch (node.op) {
        case '+':
          return lhs + rhs;
        case '-':
          return lhs - rhs;
        case '*':
          return lhs * rhs;
        case '/':
          return lhs / rhs;
        default:
          if (lhs < 0.0 && rhs != std::floor(rhs)) {
            throw DomainError("negative base with non-integer exponent in '" +
                              describe(node) + "'");
          }
          return std::pow(lhs, rhs);
      }
    }
  }
  throw Error("corrupt expression node");
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::number:
      return a.number == b.number;
    case Kind::variable:
      return a.name == b.name;
    case Kind::negate:
      return equal_nodes(*a.lhs, *b.lhs);
    case Kind::call:
      return a.name == b.name && equal_nodes(*a.lhs, *b.lhs);
    case Kind::binary:
      return a.op == b.op && equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
  }
  return false;
}

}  // namespace

Expr Expr::parse(std::string_view text, const std::vector<std::string>& allowed_vars) {
  return Expr(Parser(text, allowed_vars).run());
}

double Expr::eval(const Bindings& bindings) const {
  return eval_node(*root_, bindings);
}

std::string Expr::to_string() const { return describe(*root_); }

bool Expr::same_structure(const Expr& other) const {
  return equal_nodes(*root_, *other.root_);
}

}  // namespace fie::expr
