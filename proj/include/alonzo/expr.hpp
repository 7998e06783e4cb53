#ifndef ALONZO_EXPR_HPP
#define ALONZO_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "alonzo/type.hpp"

namespace alonzo {

// Fully desugared core expressions.  Variable identity is the pair
// (name, type): the same name at different types is a different variable.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Tag { Var, Const, Eq, App, Abs, Iota, Pair };
  Tag tag;
  std::string name;  // Var/Const; bound-variable name for Abs/Iota
  TypePtr ty;        // Var/Const type; bound-variable type for Abs/Iota
  ExprPtr a, b;      // Eq: lhs/rhs; App: fun/arg; Pair: fst/snd; Abs/Iota: body in a
};

ExprPtr var(const std::string& name, TypePtr ty);
ExprPtr cnst(const std::string& name, TypePtr ty);
ExprPtr eq(ExprPtr lhs, ExprPtr rhs);
ExprPtr app(ExprPtr fun, ExprPtr arg);
ExprPtr abs(const std::string& v, TypePtr vty, ExprPtr body);
ExprPtr iota(const std::string& v, TypePtr vty, ExprPtr body);
ExprPtr pair(ExprPtr fst, ExprPtr snd);

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace alonzo

#endif
