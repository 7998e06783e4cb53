#include <cctype>

#include "alonzo/surface.hpp"

namespace alonzo {

namespace {

// Printing precedence, loosest to tightest.  Binders and `if` extend
// maximally to the right, so they parenthesize anywhere but at the top.
enum Prec {
  kBinder = 0,
  kImplies = 2,
  kOr = 3,
  kAnd = 4,
  kNot = 5,
  kRel = 6,
  kInfix = 7,
  kApp = 8,
  kAtom = 9,
};

using pc::match_forall;
using pc::match_not;

bool is_symbolic(const std::string& name) {
  return !name.empty() && !std::isalnum(static_cast<unsigned char>(name[0])) &&
         name[0] != '_';
}

struct Piece {
  std::string text;
  int prec;
};

Piece go(const ExprPtr& e);

std::string at(const ExprPtr& e, int min) {
  Piece p = go(e);
  if (p.prec < min) return "(" + p.text + ")";
  return p.text;
}

Piece go(const ExprPtr& e) {
  if (alpha_eq(e, pc::truth())) return {"T", kAtom};
  if (alpha_eq(e, pc::falsity())) return {"F", kAtom};

  ExprPtr a, b, body;
  std::string x;
  TypePtr ty;

  // exists x:ty. B  ==  ~forall x:ty. ~B
  if (match_not(e, a) && match_forall(a, x, ty, body)) {
    ExprPtr inner;
    if (match_not(body, inner))
      return {"exists " + x + ":" + show_type(ty) + ". " + at(inner, kBinder),
              kBinder};
    return {"~(forall " + x + ":" + show_type(ty) + ". " + at(body, kBinder) +
                ")",
            kNot};
  }
  if (match_forall(e, x, ty, body))
    return {"forall " + x + ":" + show_type(ty) + ". " + at(body, kBinder),
            kBinder};
  if (match_not(e, a)) return {"~" + at(a, kNot), kNot};

  // a ~= b  ==  (a! \/ b!) => a = b
  if (pc::match_implies(e, a, b) && b->tag == Expr::Tag::Eq) {
    const ExprPtr &l = b->a, &r = b->b;
    if (alpha_eq(a, pc::or_(pc::is_defined(l), pc::is_defined(r))))
      return {at(l, kInfix) + " ~= " + at(r, kInfix), kRel};
  }
  if (pc::match_and(e, a, b))
    return {at(a, kNot) + " /\\ " + at(b, kAnd), kAnd};
  if (pc::match_or(e, a, b))
    return {at(a, kAnd) + " \\/ " + at(b, kOr), kOr};
  if (pc::match_implies(e, a, b))
    return {at(a, kOr) + " => " + at(b, kImplies), kImplies};

  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Const:
      // a symbolic name outside infix position needs parentheses to
      // reparse, e.g. the bare operation in set-op(*)
      if (is_symbolic(e->name)) return {"(" + e->name + ")", kAtom};
      return {e->name, kAtom};
    case Expr::Tag::Eq:
      if (alpha_eq(e->a, e->b) && e->a->tag != Expr::Tag::Abs)
        return {at(e->a, kAtom) + " !", kApp};
      return {at(e->a, kInfix) + " = " + at(e->b, kInfix), kRel};
    case Expr::Tag::App: {
      // infix rendering for applied symbolic constants
      if (e->a->tag == Expr::Tag::Const && is_symbolic(e->a->name) &&
          e->b->tag == Expr::Tag::Pair)
        return {at(e->b->a, kApp) + " " + e->a->name + " " + at(e->b->b, kApp),
                kInfix};
      if (e->a->tag == Expr::Tag::App &&
          e->a->a->tag == Expr::Tag::Const && is_symbolic(e->a->a->name))
        return {at(e->a->b, kApp) + " " + e->a->a->name + " " + at(e->b, kApp),
                kInfix};
      return {at(e->a, kApp) + " " + at(e->b, kAtom), kApp};
    }
    case Expr::Tag::Abs:
      return {"\\" + e->name + ":" + show_type(e->ty) + ". " +
                  at(e->a, kBinder),
              kBinder};
    case Expr::Tag::Iota:
      return {"I " + e->name + ":" + show_type(e->ty) + ". " +
                  at(e->a, kBinder),
              kBinder};
    case Expr::Tag::Pair:
      return {"(" + at(e->a, kBinder) + ", " + at(e->b, kBinder) + ")", kAtom};
  }
  throw TypeError("unprintable expression");
}

}  // namespace

std::string fmt_expr(const ExprPtr& e) { return go(e).text; }

std::string fmt_type(const TypePtr& t) { return show_type(t); }

}  // namespace alonzo
