#include "vofl/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "vofl/special_functions.hpp"

namespace vofl {
namespace {

constexpr std::array<std::pair<std::string_view, Func>, 9> kFuncs{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"tanh", Func::Tanh},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
    {"gamma", Func::Gamma},
}};

std::string allowed_identifiers() {
  std::string out = "x, pi";
  for (const auto& [name, f] : kFuncs) {
    out += ", ";
    out += name;
  }
  return out;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (true) {
      if (accept('+')) {
        lhs = Expr::binary('+', lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary('-', lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (true) {
      if (accept('*')) {
        lhs = Expr::binary('*', lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary('/', lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::negate(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (accept('^')) return Expr::binary('^', base, parse_unary());
    return base;
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept('(')) {
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail_at("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail_at("malformed exponent in number", start);
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail_at("malformed number", start);
    return Expr::number(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expr::variable();
    if (name == "pi") return Expr::pi();
    for (const auto& [fname, f] : kFuncs) {
      if (name == fname) {
        expect('(');
        Expr arg = parse_expr();
        expect(')');
        return Expr::call(f, arg);
      }
    }
    fail_at("unknown identifier '" + std::string(name) + "' (allowed: " + allowed_identifiers() + ")",
            start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Expr::Node& node, std::ostringstream& out) {
  std::visit(Overloaded{
                 [&](const Expr::Number& n) {
                   std::array<char, 32> buf{};
                   const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
                   out << std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
                 },
                 [&](const Expr::Variable&) { out << 'x'; },
                 [&](const Expr::Pi&) { out << "pi"; },
                 [&](const Expr::Negate& n) {
                   out << "(-";
                   print(*n.operand, out);
                   out << ')';
                 },
                 [&](const Expr::Binary& b) {
                   out << '(';
                   print(*b.lhs, out);
                   out << ' ' << b.op << ' ';
                   print(*b.rhs, out);
                   out << ')';
                 },
                 [&](const Expr::Call& c) {
                   out << func_name(c.func) << '(';
                   print(*c.arg, out);
                   out << ')';
                 },
             },
             node);
}

std::string node_text(const Expr::Node& node) {
  std::ostringstream out;
  print(node, out);
  return out.str();
}

[[noreturn]] void domain_fail(const std::string& what, const Expr::Node& node) {
  throw DomainError(what + " in '" + node_text(node) + "'");
}

double apply(Func f, double v, const Expr::Node& node) {
  switch (f) {
    case Func::Sin: return std::sin(v);
    case Func::Cos: return std::cos(v);
    case Func::Tan: return std::tan(v);
    case Func::Tanh: return std::tanh(v);
    case Func::Exp: return std::exp(v);
    case Func::Log:
      if (!(v > 0.0)) domain_fail("log of non-positive value " + std::to_string(v), node);
      return std::log(v);
    case Func::Sqrt:
      if (v < 0.0) domain_fail("sqrt of negative value " + std::to_string(v), node);
      return std::sqrt(v);
    case Func::Abs: return std::fabs(v);
    case Func::Gamma:
      if (v <= 0.0 && v == std::floor(v)) domain_fail("gamma pole at " + std::to_string(v), node);
      return v > 0.0 ? gamma_ratio(v, 1.0) : std::tgamma(v);
  }
  domain_fail("unknown function", node);
}

double evaluate(const Expr::Node& node, double x) {
  const double v = std::visit(
      Overloaded{
          [](const Expr::Number& n) { return n.value; },
          [x](const Expr::Variable&) { return x; },
          [](const Expr::Pi&) { return std::numbers::pi; },
          [x](const Expr::Negate& n) { return -evaluate(*n.operand, x); },
          [x, &node](const Expr::Binary& b) {
            const double l = evaluate(*b.lhs, x);
            const double r = evaluate(*b.rhs, x);
            switch (b.op) {
              case '+': return l + r;
              case '-': return l - r;
              case '*': return l * r;
              case '/':
                if (r == 0.0) domain_fail("division by zero", node);
                return l / r;
              default: return std::pow(l, r);
            }
          },
          [x, &node](const Expr::Call& c) { return apply(c.func, evaluate(*c.arg, x), node); },
      },
      node);
  if (!std::isfinite(v)) domain_fail("non-finite result", node);
  return v;
}

bool equal(const Expr::Node& a, const Expr::Node& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Expr::Number& n) { return n.value == std::get<Expr::Number>(b).value; },
          [](const Expr::Variable&) { return true; },
          [](const Expr::Pi&) { return true; },
          [&](const Expr::Negate& n) {
            return equal(*n.operand, *std::get<Expr::Negate>(b).operand);
          },
          [&](const Expr::Binary& l) {
            const auto& r = std::get<Expr::Binary>(b);
            return l.op == r.op && equal(*l.lhs, *r.lhs) && equal(*l.rhs, *r.rhs);
          },
          [&](const Expr::Call& l) {
            const auto& r = std::get<Expr::Call>(b);
            return l.func == r.func && equal(*l.arg, *r.arg);
          },
      },
      a);
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t column)
    : UsageError("column " + std::to_string(column) + ": " + message), column_(column) {}

std::string_view func_name(Func f) {
  for (const auto& [name, g] : kFuncs) {
    if (g == f) return name;
  }
  return "?";
}

Expr::Expr(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw UsageError("Expr: null root");
}

Expr Expr::number(double v) { return Expr(std::make_shared<const Node>(Number{v})); }
Expr Expr::variable() { return Expr(std::make_shared<const Node>(Variable{})); }
Expr Expr::pi() { return Expr(std::make_shared<const Node>(Pi{})); }
Expr Expr::negate(const Expr& e) { return Expr(std::make_shared<const Node>(Negate{e.root_})); }
Expr Expr::binary(char op, const Expr& lhs, const Expr& rhs) {
  if (op != '+' && op != '-' && op != '*' && op != '/' && op != '^') {
    throw UsageError(std::string("Expr::binary: unknown operator '") + op + "'");
  }
  return Expr(std::make_shared<const Node>(Binary{op, lhs.root_, rhs.root_}));
}
Expr Expr::call(Func f, const Expr& arg) {
  return Expr(std::make_shared<const Node>(Call{f, arg.root_}));
}

double Expr::operator()(double x) const { return evaluate(*root_, x); }

std::string Expr::to_string() const { return node_text(*root_); }

bool operator==(const Expr& a, const Expr& b) { return equal(*a.root_, *b.root_); }

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

double eval(const Expr& e, double x) { return e(x); }

}  // namespace vofl
