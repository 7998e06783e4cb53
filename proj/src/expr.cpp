#include "alonzo/expr.hpp"

namespace alonzo {

namespace {
ExprPtr mk(Expr::Tag tag, std::string name, TypePtr ty, ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{tag, std::move(name), std::move(ty),
                                     std::move(a), std::move(b)});
}
}  // namespace

ExprPtr var(const std::string& name, TypePtr ty) {
  return mk(Expr::Tag::Var, name, std::move(ty), nullptr, nullptr);
}
ExprPtr cnst(const std::string& name, TypePtr ty) {
  return mk(Expr::Tag::Const, name, std::move(ty), nullptr, nullptr);
}
ExprPtr eq(ExprPtr lhs, ExprPtr rhs) {
  return mk(Expr::Tag::Eq, "", nullptr, std::move(lhs), std::move(rhs));
}
ExprPtr app(ExprPtr fun, ExprPtr arg) {
  return mk(Expr::Tag::App, "", nullptr, std::move(fun), std::move(arg));
}
ExprPtr abs(const std::string& v, TypePtr vty, ExprPtr body) {
  return mk(Expr::Tag::Abs, v, std::move(vty), std::move(body), nullptr);
}
ExprPtr iota(const std::string& v, TypePtr vty, ExprPtr body) {
  return mk(Expr::Tag::Iota, v, std::move(vty), std::move(body), nullptr);
}
ExprPtr pair(ExprPtr fst, ExprPtr snd) {
  return mk(Expr::Tag::Pair, "", nullptr, std::move(fst), std::move(snd));
}

}  // namespace alonzo
