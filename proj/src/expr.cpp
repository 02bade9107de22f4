#include "schlomilch/expr.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <numbers>
#include <set>
#include <sstream>

#include "schlomilch/error.hpp"
#include "schlomilch/specfun.hpp"

namespace schlomilch::expr {

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{Constant{value}}));
}
Expr Expr::variable(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Variable{std::move(name)}}));
}
Expr Expr::negate(Expr child) {
  return Expr(std::make_shared<const Node>(Node{Negate{std::move(child)}}));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(
      Node{Binary{op, std::move(lhs), std::move(rhs)}}));
}
Expr Expr::call(std::string function, std::vector<Expr> args) {
  return Expr(std::make_shared<const Node>(
      Node{Call{std::move(function), std::move(args)}}));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Special functions are partial; outside their domain they return NaN so the
// quadrature layer sees the usual sentinel.
template <class F>
double guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

using Fn1 = double (*)(double);
using Fn2 = double (*)(double, double);

struct Builtin {
  const char* name;
  int arity;
  bool special;
  Fn1 f1;
  Fn2 f2;
};

double f_exp(double x) { return std::exp(x); }
double f_log(double x) { return std::log(x); }
double f_sin(double x) { return std::sin(x); }
double f_cos(double x) { return std::cos(x); }
double f_tan(double x) { return std::tan(x); }
double f_sinh(double x) { return std::sinh(x); }
double f_cosh(double x) { return std::cosh(x); }
double f_sqrt(double x) { return std::sqrt(x); }
double f_abs(double x) { return std::fabs(x); }
double f_pow(double x, double y) { return std::pow(x, y); }
double f_erf(double x) { return guarded([&] { return specfun::erf(x); }); }
double f_i0(double x) { return guarded([&] { return specfun::bessel_i(0, x); }); }
double f_i1(double x) { return guarded([&] { return specfun::bessel_i(1, x); }); }
double f_j0(double x) { return guarded([&] { return specfun::bessel_j(0, x); }); }
double f_j1(double x) { return guarded([&] { return specfun::bessel_j(1, x); }); }
double f_si(double x) {
  return guarded([&] { return specfun::sine_integral(x); });
}
double f_gamma(double x) { return guarded([&] { return specfun::gamma(x); }); }
double f_zeta(double x) { return guarded([&] { return specfun::zeta(x); }); }

constexpr std::array<Builtin, 18> kBuiltins{{
    {"exp", 1, false, f_exp, nullptr},
    {"log", 1, false, f_log, nullptr},
    {"sin", 1, false, f_sin, nullptr},
    {"cos", 1, false, f_cos, nullptr},
    {"tan", 1, false, f_tan, nullptr},
    {"sinh", 1, false, f_sinh, nullptr},
    {"cosh", 1, false, f_cosh, nullptr},
    {"sqrt", 1, false, f_sqrt, nullptr},
    {"abs", 1, false, f_abs, nullptr},
    {"pow", 2, false, nullptr, f_pow},
    {"erf", 1, true, f_erf, nullptr},
    {"besseli0", 1, true, f_i0, nullptr},
    {"besseli1", 1, true, f_i1, nullptr},
    {"besselj0", 1, true, f_j0, nullptr},
    {"besselj1", 1, true, f_j1, nullptr},
    {"si", 1, true, f_si, nullptr},
    {"gamma", 1, true, f_gamma, nullptr},
    {"zeta", 1, true, f_zeta, nullptr},
}};

const Builtin* find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (name == b.name) return &b;
  return nullptr;
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("expected operator or end of input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
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
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+'))
        lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
      else if (accept('-'))
        lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*'))
        lhs = Expr::binary(BinaryOp::mul, lhs, parse_unary());
      else if (accept('/'))
        lhs = Expr::binary(BinaryOp::div, lhs, parse_unary());
      else
        return lhs;
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::negate(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return Expr::binary(BinaryOp::pow, base, parse_unary());
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected number, name or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_ident_start(c)) return parse_name();
    fail("expected number, name or '('");
  }

  Expr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        ++pos_;
      if (pos_ < text_.size() && is_digit(text_[pos_])) {
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec == std::errc::result_out_of_range) {
      pos_ = start;
      fail("number literal out of range");
    }
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number literal");
    }
    return Expr::constant(value);
  }

  Expr parse_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const Builtin* b = find_builtin(name);
      if (b == nullptr) {
        pos_ = start;
        fail("unknown function '" + name + "'");
      }
      ++pos_;
      std::vector<Expr> args;
      args.push_back(parse_expr());
      while (accept(',')) args.push_back(parse_expr());
      if (static_cast<int>(args.size()) != b->arity) {
        pos_ = start;
        fail("function '" + name + "' takes " + std::to_string(b->arity) +
             " argument(s), got " + std::to_string(args.size()));
      }
      expect(')');
      return Expr::call(std::move(name), std::move(args));
    }
    if (name == "pi") return Expr::constant(std::numbers::pi);
    if (name == "e") return Expr::constant(std::numbers::e);
    return Expr::variable(std::move(name));
  }
};

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::pow: return "^";
  }
  return "?";
}

void print(const Expr& e, std::ostringstream& out) {
  std::visit(
      overloaded{
          [&](const Constant& c) {
            if (std::signbit(c.value))
              out << "(-" << format_number(-c.value) << ')';
            else
              out << format_number(c.value);
          },
          [&](const Variable& v) { out << v.name; },
          [&](const Negate& n) {
            out << "(-";
            print(n.child, out);
            out << ')';
          },
          [&](const Binary& b) {
            out << '(';
            print(b.lhs, out);
            out << ' ' << op_symbol(b.op) << ' ';
            print(b.rhs, out);
            out << ')';
          },
          [&](const Call& c) {
            out << c.function << '(';
            for (std::size_t i = 0; i < c.args.size(); ++i) {
              if (i) out << ", ";
              print(c.args[i], out);
            }
            out << ')';
          }},
      e.node().value);
}

void collect_names(const Expr& e, std::set<std::string>& names) {
  std::visit(overloaded{[](const Constant&) {},
                        [&](const Variable& v) { names.insert(v.name); },
                        [&](const Negate& n) { collect_names(n.child, names); },
                        [&](const Binary& b) {
                          collect_names(b.lhs, names);
                          collect_names(b.rhs, names);
                        },
                        [&](const Call& c) {
                          for (const auto& a : c.args) collect_names(a, names);
                        }},
             e.node().value);
}

// RPN bytecode.
enum class Op : unsigned char { push, load_x, neg, add, sub, mul, div, pow, call1, call2 };

struct Instr {
  Op op;
  double value = 0.0;
  Fn1 f1 = nullptr;
  Fn2 f2 = nullptr;
};

struct Program {
  std::vector<Instr> code;
  std::size_t max_depth = 0;
};

class Compiler {
 public:
  Compiler(std::string_view variable, const Bindings& params)
      : variable_(variable), params_(params) {}

  Program build(const Expr& e) {
    emit(e);
    return std::move(program_);
  }

 private:
  std::string_view variable_;
  const Bindings& params_;
  Program program_;
  std::size_t depth_ = 0;

  void push(Instr i) {
    program_.code.push_back(i);
    ++depth_;
    program_.max_depth = std::max(program_.max_depth, depth_);
  }

  void emit(const Expr& e) {
    std::visit(
        overloaded{
            [&](const Constant& c) { push({Op::push, c.value}); },
            [&](const Variable& v) {
              if (v.name == variable_) {
                push({Op::load_x});
                return;
              }
              auto it = params_.find(v.name);
              if (it == params_.end())
                throw DomainError("unbound name '" + v.name + "'");
              push({Op::push, it->second});
            },
            [&](const Negate& n) {
              emit(n.child);
              program_.code.push_back({Op::neg});
            },
            [&](const Binary& b) {
              emit(b.lhs);
              emit(b.rhs);
              static constexpr Op map[] = {Op::add, Op::sub, Op::mul, Op::div,
                                           Op::pow};
              program_.code.push_back({map[static_cast<int>(b.op)]});
              --depth_;
            },
            [&](const Call& c) {
              const Builtin* fn = find_builtin(c.function);
              if (fn == nullptr || fn->arity != static_cast<int>(c.args.size()))
                throw DomainError("invalid call to '" + c.function + "'");
              for (const auto& a : c.args) emit(a);
              Instr i{fn->arity == 1 ? Op::call1 : Op::call2};
              i.f1 = fn->f1;
              i.f2 = fn->f2;
              program_.code.push_back(i);
              depth_ -= static_cast<std::size_t>(fn->arity - 1);
            }},
        e.node().value);
  }
};

double run(const Program& p, double x, double* stack) {
  std::size_t sp = 0;
  for (const Instr& i : p.code) {
    switch (i.op) {
      case Op::push: stack[sp++] = i.value; break;
      case Op::load_x: stack[sp++] = x; break;
      case Op::neg: stack[sp - 1] = -stack[sp - 1]; break;
      case Op::add: --sp; stack[sp - 1] = stack[sp - 1] + stack[sp]; break;
      case Op::sub: --sp; stack[sp - 1] = stack[sp - 1] - stack[sp]; break;
      case Op::mul: --sp; stack[sp - 1] = stack[sp - 1] * stack[sp]; break;
      case Op::div: --sp; stack[sp - 1] = stack[sp - 1] / stack[sp]; break;
      case Op::pow: --sp; stack[sp - 1] = std::pow(stack[sp - 1], stack[sp]); break;
      case Op::call1: stack[sp - 1] = i.f1(stack[sp - 1]); break;
      case Op::call2: --sp; stack[sp - 1] = i.f2(stack[sp - 1], stack[sp]); break;
    }
  }
  return stack[0];
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  const auto& na = a.node().value;
  const auto& nb = b.node().value;
  if (na.index() != nb.index()) return false;
  return std::visit(
      overloaded{
          [&](const Constant& c) {
            double other = std::get<Constant>(nb).value;
            return std::memcmp(&c.value, &other, sizeof(double)) == 0;
          },
          [&](const Variable& v) { return v.name == std::get<Variable>(nb).name; },
          [&](const Negate& n) { return n.child == std::get<Negate>(nb).child; },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(nb);
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const Call& x) {
            const auto& y = std::get<Call>(nb);
            if (x.function != y.function || x.args.size() != y.args.size())
              return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
              if (!(x.args[i] == y.args[i])) return false;
            return true;
          }},
      na);
}

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  std::ostringstream out;
  print(e, out);
  return out.str();
}

std::vector<std::string> free_names(const Expr& e) {
  std::set<std::string> names;
  collect_names(e, names);
  return {names.begin(), names.end()};
}

const std::vector<FunctionInfo>& registered_functions() {
  static const std::vector<FunctionInfo> list = [] {
    std::vector<FunctionInfo> out;
    for (const auto& b : kBuiltins) out.push_back({b.name, b.arity, b.special});
    return out;
  }();
  return list;
}

RealFunction compile(const Expr& e, std::string_view variable,
                     const Bindings& parameters) {
  auto program =
      std::make_shared<const Program>(Compiler(variable, parameters).build(e));
  return [program](double x) {
    constexpr std::size_t kInline = 32;
    if (program->max_depth <= kInline) {
      std::array<double, kInline> stack;
      return run(*program, x, stack.data());
    }
    std::vector<double> stack(program->max_depth);
    return run(*program, x, stack.data());
  };
}

RealFunction compile(std::string_view text, std::string_view variable,
                     const Bindings& parameters) {
  return compile(parse(text), variable, parameters);
}

}  // namespace schlomilch::expr
