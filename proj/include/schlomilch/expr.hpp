#pragma once

// A small expression language for user-supplied integrands.
//
//   expr    := term   (('+' | '-') term)*
//   term    := unary  (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// `pi` and `e` are predefined constants. Implicit multiplication ("2x") is a
// syntax error.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schlomilch/real_function.hpp"

namespace schlomilch::expr {

enum class BinaryOp { add, sub, mul, div, pow };

struct Node;

// Immutable handle to an expression tree. Copies share structure.
class Expr {
 public:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }

  static Expr constant(double value);
  static Expr variable(std::string name);
  static Expr negate(Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(std::string function, std::vector<Expr> args);

 private:
  std::shared_ptr<const Node> node_;
};

struct Constant {
  double value;
};
struct Variable {
  std::string name;
};
struct Negate {
  Expr child;
};
struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct Call {
  std::string function;
  std::vector<Expr> args;
};

struct Node {
  std::variant<Constant, Variable, Negate, Binary, Call> value;
};

// Structural equality; constants compare bitwise.
bool operator==(const Expr& a, const Expr& b);

Expr parse(std::string_view text);

// Fully parenthesised rendering that parses back to the same tree.
std::string to_string(const Expr& e);

// Free variable names, sorted and deduplicated.
std::vector<std::string> free_names(const Expr& e);

struct FunctionInfo {
  std::string name;
  int arity;
  bool special;
};

const std::vector<FunctionInfo>& registered_functions();

using Bindings = std::map<std::string, double, std::less<>>;

// Compile to a pure callable in `variable`. Every other name must be bound.
// Throws DomainError naming the first unbound name.
RealFunction compile(const Expr& e, std::string_view variable,
                     const Bindings& parameters = {});

// parse + compile.
RealFunction compile(std::string_view text, std::string_view variable,
                     const Bindings& parameters = {});

}  // namespace schlomilch::expr
