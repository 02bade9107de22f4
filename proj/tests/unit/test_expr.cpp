#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "schlomilch/error.hpp"
#include "schlomilch/expr.hpp"

using namespace schlomilch;
using namespace schlomilch::expr;

namespace {

// Independent tree walk, used as the 0-ulp oracle for compiled code.
double walk(const Expr& e, double x) {
  const auto& v = e.node().value;
  if (auto c = std::get_if<Constant>(&v)) return c->value;
  if (std::get_if<Variable>(&v)) return x;
  if (auto n = std::get_if<Negate>(&v)) return -walk(n->child, x);
  if (auto b = std::get_if<Binary>(&v)) {
    double l = walk(b->lhs, x), r = walk(b->rhs, x);
    switch (b->op) {
      case BinaryOp::add: return l + r;
      case BinaryOp::sub: return l - r;
      case BinaryOp::mul: return l * r;
      case BinaryOp::div: return l / r;
      case BinaryOp::pow: return std::pow(l, r);
    }
  }
  const auto& call = std::get<Call>(v);
  double a = walk(call.args[0], x);
  const std::string& f = call.function;
  if (f == "exp") return std::exp(a);
  if (f == "log") return std::log(a);
  if (f == "sin") return std::sin(a);
  if (f == "cos") return std::cos(a);
  if (f == "tan") return std::tan(a);
  if (f == "sinh") return std::sinh(a);
  if (f == "cosh") return std::cosh(a);
  if (f == "sqrt") return std::sqrt(a);
  if (f == "abs") return std::fabs(a);
  if (f == "pow") return std::pow(a, walk(call.args[1], x));
  FAIL("unexpected function " << f);
  return 0.0;
}

// Random elementary expression in x, rendered as text.
std::string random_text(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 1);
  static const char* unary[] = {"exp", "log", "sin", "cos", "sqrt", "abs", "sinh", "tan"};
  switch (pick(rng)) {
    case 0: return "x";
    case 1: {
      std::uniform_int_distribution<int> n(0, 40);
      return std::to_string(n(rng) / 8.0).substr(0, 5);
    }
    case 2: return "(" + random_text(rng, depth - 1) + "+" + random_text(rng, depth - 1) + ")";
    case 3: return "(" + random_text(rng, depth - 1) + "-" + random_text(rng, depth - 1) + ")";
    case 4: return random_text(rng, depth - 1) + "*" + random_text(rng, depth - 1);
    case 5: return random_text(rng, depth - 1) + "/" + random_text(rng, depth - 1);
    case 6: return "(" + random_text(rng, depth - 1) + ")^" + random_text(rng, 0);
    case 7: return "-" + random_text(rng, depth - 1);
    case 8: return "pow(" + random_text(rng, depth - 1) + "," + random_text(rng, 0) + ")";
    default: {
      std::uniform_int_distribution<int> u(0, 7);
      return std::string(unary[u(rng)]) + "(" + random_text(rng, depth - 1) + ")";
    }
  }
}

bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("precedence: + below *") {
  auto e = parse("2+3*x");
  auto expected = Expr::binary(
      BinaryOp::add, Expr::constant(2),
      Expr::binary(BinaryOp::mul, Expr::constant(3), Expr::variable("x")));
  CHECK(e == expected);
}

TEST_CASE("^ is right associative") {
  CHECK(compile("2^3^2", "x")(0.7) == 512.0);
  CHECK(compile("-2^2", "x")(0.0) == -4.0);
  CHECK(compile("2^-1", "x")(0.0) == 0.5);
}

TEST_CASE("examples evaluate") {
  CHECK(compile("exp(-(x-1/x)^2)", "x")(1.0) == 1.0);
  CHECK(compile("a*x+b", "x", {{"a", 2.0}, {"b", 1.0}})(3.0) == 7.0);
  CHECK_FALSE(std::isfinite(compile("1/x", "x")(0.0)));
  CHECK(compile("exp(-c*(x-1/x)^2)", "x", {{"c", 1.0}})(2.0) ==
        doctest::Approx(std::exp(-2.25)).epsilon(1e-15));
  CHECK(compile("pi", "x")(0.0) == doctest::Approx(3.14159265358979).epsilon(1e-14));
  CHECK(compile("e", "x")(0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(compile("1.5e2 + .5", "x")(0.0) == 150.5);
}

TEST_CASE("special functions are callable") {
  CHECK(compile("gamma(u)", "u")(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(compile("besseli0(u)", "u")(0.0) == 1.0);
  CHECK(compile("erf(u)", "u")(0.0) == 0.0);
  CHECK(compile("zeta(u)", "u")(2.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-12));
}

TEST_CASE("negative base with fractional exponent gives the sentinel") {
  CHECK(std::isnan(compile("(-8)^(1/3)", "x")(0.0)));
  CHECK(std::isnan(compile("log(x)", "x")(-1.0)));
}

TEST_CASE("syntax errors carry an offset") {
  CHECK_THROWS_AS(parse("2x"), ParseError);
  CHECK_THROWS_AS(parse("1+"), ParseError);
  CHECK_THROWS_AS(parse("(1"), ParseError);
  CHECK_THROWS_AS(parse("foo(1)"), ParseError);
  CHECK_THROWS_AS(parse("exp(1,2)"), ParseError);
  CHECK_THROWS_AS(parse("pow(1)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("1 + * 2");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("unbound names are rejected at compile time") {
  CHECK_THROWS_AS(compile("a*x", "x"), DomainError);
  CHECK_THROWS_AS(compile("x*y", "x"), DomainError);
  CHECK(free_names(parse("a*x+b*x")) == std::vector<std::string>{"a", "b", "x"});
}

TEST_CASE("registry covers the documented functions") {
  std::vector<std::string> names;
  for (const auto& f : registered_functions()) names.push_back(f.name);
  for (const char* n : {"exp", "log", "sin", "cos", "tan", "sinh", "cosh", "sqrt", "abs", "pow",
                        "erf", "besseli0", "besseli1", "besselj0", "besselj1", "si", "gamma",
                        "zeta"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("property: print then parse is idempotent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto text = random_text(rng, 4);
    auto e = parse(text);
    auto printed = to_string(e);
    CAPTURE(text);
    CAPTURE(printed);
    CHECK(parse(printed) == e);
    CHECK(to_string(parse(printed)) == printed);
  }
}

TEST_CASE("property: compiled code matches a tree walk to 0 ulp") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    auto text = random_text(rng, 4);
    auto e = parse(text);
    auto f = compile(e, "x");
    for (int j = 0; j < 5; ++j) {
      double x = xs(rng);
      CAPTURE(text);
      CAPTURE(x);
      CHECK(same_bits(f(x), walk(e, x)));
    }
  }
}

TEST_CASE("property: compiled functions are referentially transparent") {
  auto f = compile("exp(-(x-1/x)^2)*besselj0(x)+si(x)", "x");
  for (double x : {0.1, 0.5, 1.0, 2.0, 3.7}) {
    double first = f(x);
    for (int i = 0; i < 5; ++i) CHECK(same_bits(f(x), first));
  }
}
