#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vofl/errors.hpp"
#include "vofl/expr.hpp"
#include "vofl/vof_operators.hpp"

using namespace vofl;

namespace {

Expr num(double v) { return Expr::number(v); }
Expr var() { return Expr::variable(); }
Expr bin(char op, const Expr& a, const Expr& b) { return Expr::binary(op, a, b); }
Expr call(Func f, const Expr& a) { return Expr::call(f, a); }

std::size_t error_column(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

Expr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  switch (pick(rng)) {
    case 0: {
      // a mix of short decimals, long mantissas and exponents
      const double v = value(rng);
      switch (rng() % 3) {
        case 0: return num(std::round(v));
        case 1: return num(v);
        default: return num(v * 1e-7);
      }
    }
    case 1: return var();
    case 2: return Expr::pi();
    case 3: return Expr::negate(random_expr(rng, depth - 1));
    case 4: {
      static const char ops[] = {'+', '-', '*', '/', '^'};
      return bin(ops[rng() % 5], random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
    default: {
      const auto f = static_cast<Func>(rng() % 9);
      return call(f, random_expr(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("x") == var());
  CHECK(parse("  x ") == var());
  CHECK(parse("pi") == Expr::pi());
  CHECK(parse("(9 + sin(x - 10))/5") ==
        bin('/', bin('+', num(9), call(Func::Sin, bin('-', var(), num(10)))), num(5)));
  CHECK(parse("1 + 2*x") == bin('+', num(1), bin('*', num(2), var())));
  CHECK(parse("1 - 2 - 3") == bin('-', bin('-', num(1), num(2)), num(3)));
  CHECK(parse("8/4/2") == bin('/', bin('/', num(8), num(4)), num(2)));
  CHECK(parse("2^3^2") == bin('^', num(2), bin('^', num(3), num(2))));
  CHECK(parse("-x^2") == Expr::negate(bin('^', var(), num(2))));
  CHECK(parse("2^-1") == bin('^', num(2), Expr::negate(num(1))));
  CHECK(parse("--x") == Expr::negate(Expr::negate(var())));
  CHECK(parse("1e-3") == num(1e-3));
  CHECK(parse(".5") == num(0.5));
  CHECK(parse("2.") == num(2.0));
  CHECK(parse("2.5E+2") == num(250.0));
}

TEST_CASE("eval examples") {
  CHECK(eval(parse("2^3^2"), 0.0) == 512.0);
  CHECK(eval(parse("-x^2"), 3.0) == -9.0);
  CHECK(eval(parse("2^-1"), 0.0) == 0.5);
  CHECK(eval(parse("1 + 0.5*abs(sin(x))"), 0.0) == 1.0);
  CHECK(eval(parse("(9 + sin(x))/10"), 0.0) == doctest::Approx(0.9).epsilon(1e-16));
  CHECK(eval(parse("pi"), 0.0) == std::numbers::pi);
  CHECK(eval(parse("gamma(5)"), 0.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(eval(parse("gamma(-0.5)"), 0.0) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(eval(parse("sqrt(x) * log(exp(2))"), 4.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(eval(parse("tan(x) - sin(x)/cos(x)"), 0.7) == doctest::Approx(0.0));
  CHECK(eval(parse("tanh(0)"), 0.0) == 0.0);
  const auto e = parse("x*x");
  CHECK(e(1.5) == 2.25);
  CHECK(eval(e, 1.5) == e(1.5));
}

TEST_CASE("syntax errors carry 1-based columns") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("   "), ParseError);
  CHECK(error_column("") == 1);
  CHECK(error_column("1 +") == 4);
  CHECK(error_column("(1 + 2") == 7);
  CHECK(error_column("1 + * 2") == 5);
  CHECK(error_column("sin x") == 5);
  CHECK(error_column("x 2") == 3);
  CHECK(error_column("2 ) ") == 3);
  CHECK(error_column("1 $ 2") == 3);
  CHECK(error_column("1e") == 1);
}

TEST_CASE("unknown identifiers list the allowed set") {
  CHECK(error_column("1 + y") == 5);
  const auto msg = error_message("cosh(x)");
  CHECK(msg.find("unknown identifier 'cosh'") != std::string::npos);
  for (const char* name : {"x", "pi", "sin", "cos", "tan", "tanh", "exp", "log", "sqrt", "abs", "gamma"}) {
    CHECK(msg.find(name) != std::string::npos);
  }
  CHECK_THROWS_AS(parse("X"), ParseError);
  // ParseError is a usage error for the CLI's exit-code mapping.
  CHECK_THROWS_AS(parse("y"), UsageError);
}

TEST_CASE("domain errors name the offending sub-expression") {
  const auto message_of = [](const std::string& text, double x) {
    try {
      eval(parse(text), x);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("1 + log(x - 1)", 1.0).find("log((x - 1))") != std::string::npos);
  CHECK(message_of("sqrt(x)", -1.0).find("sqrt(x)") != std::string::npos);
  CHECK(message_of("gamma(x)", 0.0).find("gamma(x)") != std::string::npos);
  CHECK(message_of("gamma(x)", -2.0).find("gamma pole") != std::string::npos);
  CHECK(message_of("1/x", 0.0).find("(1 / x)") != std::string::npos);
  CHECK(message_of("exp(x)", 1000.0) != "");
  CHECK(message_of("log(x)", 0.5) == "");
}

TEST_CASE("printing then parsing is the identity on trees") {
  std::mt19937 rng(20240607);
  for (int k = 0; k < 50; ++k) {
    const Expr e = random_expr(rng, 4);
    const std::string text = e.to_string();
    const Expr back = parse(text);
    CHECK_MESSAGE(back == e, text);
    CHECK(back.to_string() == text);
  }
}

TEST_CASE("order functions and forcing from the examples match hand-built trees") {
  const auto sinx = call(Func::Sin, var());
  struct Case {
    std::string text;
    Expr tree;
    std::function<double(double)> direct;
  };
  const std::vector<Case> cases{
      {"(9 + sin(x))/10", bin('/', bin('+', num(9), sinx), num(10)),
       [](double x) { return (9.0 + std::sin(x)) / 10.0; }},
      {"(3 + tanh(x))/2", bin('/', bin('+', num(3), call(Func::Tanh, var())), num(2)),
       [](double x) { return (3.0 + std::tanh(x)) / 2.0; }},
      {"(9 + sin(x - 10))/5", bin('/', bin('+', num(9), call(Func::Sin, bin('-', var(), num(10)))), num(5)),
       [](double x) { return (9.0 + std::sin(x - 10.0)) / 5.0; }},
      {"1 + 0.5*abs(sin(x))", bin('+', num(1), bin('*', num(0.5), call(Func::Abs, sinx))),
       [](double x) { return 1.0 + 0.5 * std::fabs(std::sin(x)); }},
      {"gamma(4)/gamma(4 - 1.5)*x^(3 - 1.5) + x^3 + 7*x + 1",
       bin('+',
           bin('+',
               bin('+',
                   bin('*', bin('/', call(Func::Gamma, num(4)), call(Func::Gamma, bin('-', num(4), num(1.5)))),
                       bin('^', var(), bin('-', num(3), num(1.5)))),
                   bin('^', var(), num(3))),
               bin('*', num(7), var())),
           num(1)),
       [](double x) { return caputo_power_rule(3.0, 1.5, 2, x) + x * x * x + 7.0 * x + 1.0; }},
  };
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  for (const auto& c : cases) {
    const Expr parsed = parse(c.text);
    CHECK(parsed == c.tree);
    for (int k = 0; k < 100; ++k) {
      const double x = dist(rng);
      const double got = eval(parsed, x);
      CHECK(std::fabs(got - eval(c.tree, x)) <= 1e-15 * std::max(1.0, std::fabs(got)));
      CHECK(std::fabs(got - c.direct(x)) <= 1e-14 * std::max(1.0, std::fabs(got)));
    }
  }
}

TEST_CASE("factories validate") {
  CHECK_THROWS_AS(Expr::binary('%', num(1), num(2)), UsageError);
  CHECK(func_name(Func::Gamma) == "gamma");
  CHECK(func_name(Func::Tanh) == "tanh");
}
