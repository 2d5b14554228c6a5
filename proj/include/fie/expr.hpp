#ifndef FIE_EXPR_HPP
#define FIE_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fie/errors.hpp"

namespace fie::expr {

/// Syntax or name-resolution failure; `offset` is the byte position in
/// the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Variable values for evaluation.
class Bindings {
 public:
  Bindings() = default;
  Bindings(std::initializer_list<std::pair<std::string, double>> vars);

  void set(std::string name, double value);
  double get(std::string_view name) const;  // throws ArgumentError if missing

 private:
  std::vector<std::pair<std::string, double>> vars_;
};

struct Node;

/// An immutable parsed arithmetic expression.
///
/// Grammar: numbers, named variables, unary minus, binary + - * / ^
/// (caret is right-associative and binds tightest), and the unary
/// functions sin, cos, tan, arctan, exp, log, sqrt, abs.  log is the
/// natural logarithm.
class Expr {
 public:
  /// Parses `text`; every identifier that is not a built-in function must
  /// appear in `allowed_vars`.
  static Expr parse(std::string_view text,
                    const std::vector<std::string>& allowed_vars);

  /// IEEE double evaluation.  log/sqrt of an invalid argument and ^ of a
  /// negative base with a non-integer exponent raise DomainError carrying
  /// the offending sub-expression.
  double eval(const Bindings& bindings) const;

  std::string to_string() const;

  /// Structural equality (same tree shape, operators, names, literals).
  bool same_structure(const Expr& other) const;

 private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace fie::expr

#endif  // FIE_EXPR_HPP
