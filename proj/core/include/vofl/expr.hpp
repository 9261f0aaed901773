#pragma once

// A small expression language over one real variable `x`, used for order
// functions, coefficients and exact solutions in run configurations.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?          right-associative, binds tighter than '-'
//   atom    := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | tan | tanh | exp | log | sqrt | abs | gamma
//
// So -x^2 is -(x^2), 2^3^2 is 2^9 and 2^-1 is 0.5. Whitespace is ignored;
// numbers are decimal with an optional exponent (1e-3, .5, 2.).

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "vofl/errors.hpp"

namespace vofl {

/// Syntax error or unknown identifier, with the 1-based column where it was found.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

enum class Func { Sin, Cos, Tan, Tanh, Exp, Log, Sqrt, Abs, Gamma };

std::string_view func_name(Func f);

class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Number {
    double value;
  };
  struct Variable {};
  struct Pi {};
  struct Negate {
    NodePtr operand;
  };
  struct Binary {
    char op;  // one of + - * / ^
    NodePtr lhs;
    NodePtr rhs;
  };
  struct Call {
    Func func;
    NodePtr arg;
  };
  struct Node : std::variant<Number, Variable, Pi, Negate, Binary, Call> {
    using variant::variant;
  };

  explicit Expr(NodePtr root);

  static Expr number(double v);
  static Expr variable();
  static Expr pi();
  static Expr negate(const Expr& e);
  static Expr binary(char op, const Expr& lhs, const Expr& rhs);
  static Expr call(Func f, const Expr& arg);

  /// Throws DomainError naming the offending sub-expression.
  double operator()(double x) const;

  /// Fully parenthesized source text; parse(to_string()) == *this.
  std::string to_string() const;

  const Node& root() const { return *root_; }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
};

Expr parse(std::string_view text);

double eval(const Expr& e, double x);

}  // namespace vofl
