#include "alonzo/builders.hpp"

namespace alonzo::pc {

namespace {

// A bound-variable name for a template that must not capture a free
// variable of any argument expression.
std::string safe_name(const std::string& base,
                      std::initializer_list<ExprPtr> args) {
  std::set<std::string> used;
  for (const auto& a : args)
    for (const auto& v : free_vars(a)) used.insert(v.name);
  if (!used.count(base)) return base;
  for (unsigned long i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

TypePtr fun_dom(const ExprPtr& f) {
  TypePtr t = infer_type(f);
  if (t->tag != Type::Tag::Fun)
    throw TypeError("expected a function, got " + show_type(t));
  return t->a;
}

}  // namespace

ExprPtr truth() {
  ExprPtr i = abs("x", bool_ty(), var("x", bool_ty()));
  return eq(i, i);
}

ExprPtr falsity() {
  return eq(abs("x", bool_ty(), truth()),
            abs("x", bool_ty(), var("x", bool_ty())));
}

ExprPtr and_(const ExprPtr& a, const ExprPtr& b) {
  // (\x,y:o. (\g:o->o->o. g T T) = (\g:o->o->o. g x y)) A B
  TypePtr goo = fun_ty(bool_ty(), fun_ty(bool_ty(), bool_ty()));
  ExprPtr g = var("g", goo);
  ExprPtr lhs = abs("g", goo, app(app(g, truth()), truth()));
  ExprPtr rhs = abs("g", goo, app(app(g, var("x", bool_ty())),
                                  var("y", bool_ty())));
  ExprPtr pc = abs("x", bool_ty(), abs("y", bool_ty(), eq(lhs, rhs)));
  return app(app(pc, a), b);
}

ExprPtr or_(const ExprPtr& a, const ExprPtr& b) {
  // (\x,y:o. ~(~x /\ ~y)) A B
  ExprPtr x = var("x", bool_ty());
  ExprPtr y = var("y", bool_ty());
  ExprPtr pc =
      abs("x", bool_ty(), abs("y", bool_ty(), not_(and_(not_(x), not_(y)))));
  return app(app(pc, a), b);
}

ExprPtr not_(const ExprPtr& a) {
  // (\x:o. x = F) A
  ExprPtr pc = abs("x", bool_ty(), eq(var("x", bool_ty()), falsity()));
  return app(pc, a);
}

ExprPtr implies(const ExprPtr& a, const ExprPtr& b) {
  // (\x,y:o. x = (x /\ y)) A B
  ExprPtr x = var("x", bool_ty());
  ExprPtr y = var("y", bool_ty());
  ExprPtr pc = abs("x", bool_ty(), abs("y", bool_ty(), eq(x, and_(x, y))));
  return app(app(pc, a), b);
}

ExprPtr iff(const ExprPtr& a, const ExprPtr& b) { return eq(a, b); }

ExprPtr conj(const std::vector<ExprPtr>& items) {
  if (items.empty()) return truth();
  ExprPtr out = items.back();
  for (size_t i = items.size() - 1; i-- > 0;) out = and_(items[i], out);
  return out;
}

ExprPtr neq(const ExprPtr& a, const ExprPtr& b) { return not_(eq(a, b)); }

ExprPtr eq_chain(const std::vector<ExprPtr>& items) {
  std::vector<ExprPtr> eqs;
  for (size_t i = 0; i + 1 < items.size(); ++i)
    eqs.push_back(eq(items[i], items[i + 1]));
  return conj(eqs);
}

ExprPtr forall(const std::string& x, const TypePtr& ty, const ExprPtr& body) {
  return eq(abs(x, ty, truth()), abs(x, ty, body));
}

ExprPtr exists(const std::string& x, const TypePtr& ty, const ExprPtr& body) {
  return not_(forall(x, ty, not_(body)));
}

ExprPtr is_defined(const ExprPtr& a) { return eq(a, a); }

ExprPtr is_undefined(const ExprPtr& a) { return not_(is_defined(a)); }

ExprPtr quasi_eq(const ExprPtr& a, const ExprPtr& b) {
  return implies(or_(is_defined(a), is_defined(b)), eq(a, b));
}

ExprPtr not_quasi_eq(const ExprPtr& a, const ExprPtr& b) {
  return not_(quasi_eq(a, b));
}

ExprPtr bot(const TypePtr& ty) {
  if (ty->tag == Type::Tag::Bool) return falsity();
  ExprPtr x = var("x", ty);
  return iota("x", ty, neq(x, x));
}

ExprPtr emp_fun(const TypePtr& dom, const TypePtr& cod) {
  return abs("x", dom, bot(cod));
}

ExprPtr id_fun(const TypePtr& ty) { return abs("x", ty, var("x", ty)); }

ExprPtr if_(const ExprPtr& c, const ExprPtr& a, const ExprPtr& b) {
  TypePtr ty = infer_type(a);
  if (ty->tag == Type::Tag::Bool)
    return and_(implies(c, a), implies(not_(c), b));
  std::string xn = safe_name("x", {c, a, b});
  ExprPtr x = var(xn, ty);
  return iota(xn, ty,
              and_(implies(c, eq(x, a)), implies(not_(c), eq(x, b))));
}

ExprPtr fst(const ExprPtr& p) {
  TypePtr t = infer_type(p);
  if (t->tag != Type::Tag::Prod)
    throw TypeError("fst applied to non-pair of type " + show_type(t));
  TypePtr a = t->a, b = t->b;
  // (\p:a*b. I x:a. exists y:b. p = (x, y)) P
  ExprPtr pv = var("p", t);
  ExprPtr pc = abs(
      "p", t,
      iota("x", a,
           exists("y", b, eq(pv, pair(var("x", a), var("y", b))))));
  return app(pc, p);
}

ExprPtr snd(const ExprPtr& p) {
  TypePtr t = infer_type(p);
  if (t->tag != Type::Tag::Prod)
    throw TypeError("snd applied to non-pair of type " + show_type(t));
  TypePtr a = t->a, b = t->b;
  ExprPtr pv = var("p", t);
  ExprPtr pc = abs(
      "p", t,
      iota("y", b,
           exists("x", a, eq(pv, pair(var("x", a), var("y", b))))));
  return app(pc, p);
}

ExprPtr total(const ExprPtr& f) {
  TypePtr dom = fun_dom(f);
  std::string xn = safe_name("x", {f});
  return forall(xn, dom, is_defined(app(f, var(xn, dom))));
}

ExprPtr restrict_(const ExprPtr& f, const ExprPtr& s) {
  TypePtr ft = infer_type(f);
  if (ft->tag != Type::Tag::Fun)
    throw TypeError("restriction of a non-function");
  TypePtr dom = ft->a, cod = ft->b;
  // (\f:dom->cod. \s:{dom}. \x:dom. if x in s then f x else bot) F S
  ExprPtr fv = var("f", ft);
  ExprPtr sv = var("s", set_ty(dom));
  ExprPtr xv = var("x", dom);
  ExprPtr pc = abs("f", ft,
                   abs("s", set_ty(dom),
                       abs("x", dom,
                           if_(member(xv, sv), app(fv, xv), bot(cod)))));
  return app(app(pc, f), s);
}

ExprPtr fun_comp_pair(const TypePtr& a, const TypePtr& b, const TypePtr& c) {
  TypePtr ab = fun_ty(a, b), bc = fun_ty(b, c);
  TypePtr pt = prod_ty(ab, bc);
  ExprPtr pv = var("p", pt);
  return abs("p", pt,
             abs("x", a, app(snd(pv), app(fst(pv), var("x", a)))));
}

ExprPtr fun_app_pair(const TypePtr& a, const TypePtr& b) {
  TypePtr pt = prod_ty(fun_ty(a, b), a);
  ExprPtr pv = var("p", pt);
  return abs("p", pt, app(fst(pv), snd(pv)));
}

ExprPtr emp_set(const TypePtr& elem) { return abs("x", elem, falsity()); }

ExprPtr univ_set(const TypePtr& elem) { return abs("x", elem, truth()); }

ExprPtr member(const ExprPtr& x, const ExprPtr& s) { return app(s, x); }

ExprPtr not_member(const ExprPtr& x, const ExprPtr& s) {
  return not_(app(s, x));
}

ExprPtr subset(const ExprPtr& s, const ExprPtr& t) {
  TypePtr elem = set_elem_ty(s);
  std::string xn = safe_name("x", {s, t});
  ExprPtr x = var(xn, elem);
  return forall(xn, elem, implies(member(x, s), member(x, t)));
}

ExprPtr fin_set(const std::vector<ExprPtr>& elems) {
  if (elems.empty()) throw TypeError("empty enumerated set has no type");
  TypePtr elem = infer_type(elems[0]);
  // (\x1:a. ... \xn:a. \x:a. x = x1 \/ ... \/ x = xn) A1 ... An
  std::vector<std::string> names;
  std::string xn = safe_name("x", {elems[0]});
  for (size_t i = 0; i < elems.size(); ++i)
    names.push_back("x" + std::to_string(i + 1));
  ExprPtr x = var(xn, elem);
  ExprPtr body = eq(x, var(names.back(), elem));
  for (size_t i = elems.size() - 1; i-- > 0;)
    body = or_(eq(x, var(names[i], elem)), body);
  ExprPtr lam = abs(xn, elem, body);
  for (size_t i = elems.size(); i-- > 0;) lam = abs(names[i], elem, lam);
  ExprPtr out = lam;
  for (const auto& e : elems) out = app(out, e);
  return out;
}

TypePtr set_elem_ty(const ExprPtr& s) {
  TypePtr t = infer_type(s);
  if (!is_set_type(t))
    throw TypeError("expected a set (quasitype), got " + show_type(t));
  return t->a;
}

bool is_univ_set(const ExprPtr& e) {
  return e->tag == Expr::Tag::Abs && alpha_eq(e->a, truth());
}

ExprPtr qt_forall(const std::string& x, const ExprPtr& q, const ExprPtr& body) {
  TypePtr elem = set_elem_ty(q);
  // relativization to the whole of a type is no relativization at all
  if (is_univ_set(q)) return forall(x, elem, body);
  return forall(x, elem, implies(member(var(x, elem), q), body));
}

ExprPtr qt_exists(const std::string& x, const ExprPtr& q, const ExprPtr& body) {
  // the dual of qt_forall, so that relativized quantifiers commute with
  // negation the same way the plain ones do
  return not_(qt_forall(x, q, not_(body)));
}

ExprPtr qt_iota(const std::string& x, const ExprPtr& q, const ExprPtr& body) {
  TypePtr elem = set_elem_ty(q);
  if (is_univ_set(q)) return iota(x, elem, body);
  return iota(x, elem, and_(member(var(x, elem), q), body));
}

ExprPtr qt_abs(const std::string& x, const ExprPtr& q, const ExprPtr& body) {
  TypePtr elem = set_elem_ty(q);
  if (is_univ_set(q)) return abs(x, elem, body);
  TypePtr cod = infer_type(body);
  return abs(x, elem, if_(member(var(x, elem), q), body, bot(cod)));
}

ExprPtr is_defined_in(const ExprPtr& a, const ExprPtr& q) {
  return and_(is_defined(a), member(a, q));
}

ExprPtr is_undefined_in(const ExprPtr& a, const ExprPtr& q) {
  return not_(is_defined_in(a, q));
}

ExprPtr fun_qty(const ExprPtr& q, const ExprPtr& t) {
  TypePtr a = set_elem_ty(q);
  TypePtr b = set_elem_ty(t);
  TypePtr ft = fun_ty(a, b);
  if (is_univ_set(q) && is_univ_set(t)) return univ_set(ft);
  // {f : a->b | forall x:a. (f x)! => (x in Q /\ f x in T)}
  std::string fn = safe_name("f", {q, t});
  std::string xn = safe_name("x", {q, t});
  ExprPtr f = var(fn, ft);
  ExprPtr x = var(xn, a);
  return abs(fn, ft,
             forall(xn, a,
                    implies(is_defined(app(f, x)),
                            and_(member(x, q), member(app(f, x), t)))));
}

ExprPtr fun_qty_pred(const ExprPtr& q) {
  TypePtr a = set_elem_ty(q);
  if (is_univ_set(q)) return univ_set(set_ty(a));
  std::string sn = safe_name("s", {q});
  ExprPtr s = var(sn, set_ty(a));
  return abs(sn, set_ty(a), subset(s, q));
}

ExprPtr prod_qty(const ExprPtr& q, const ExprPtr& t) {
  TypePtr a = set_elem_ty(q);
  TypePtr b = set_elem_ty(t);
  TypePtr pt = prod_ty(a, b);
  if (is_univ_set(q) && is_univ_set(t)) return univ_set(pt);
  std::string pn = safe_name("p", {q, t});
  ExprPtr p = var(pn, pt);
  return abs(pn, pt, and_(member(fst(p), q), member(snd(p), t)));
}

ExprPtr set_qty(const ExprPtr& q) { return fun_qty_pred(q); }

ExprPtr set_op(const ExprPtr& f) {
  TypePtr ft = infer_type(f);
  if (ft->tag != Type::Tag::Fun || ft->a->tag != Type::Tag::Prod)
    throw TypeError("set-op expects a function on pairs");
  TypePtr a = ft->a->a, b = ft->a->b, c = ft->b;
  TypePtr pt = prod_ty(set_ty(a), set_ty(b));
  // (\f:(a*b)->c. \p:({a}*{b}).
  //    {z:c | exists x:(fst p). exists y:(snd p). z = f (x, y)}) F
  ExprPtr fv = var("f", ft);
  ExprPtr p = var("p", pt);
  ExprPtr z = var("z", c);
  ExprPtr x = var("x", a);
  ExprPtr y = var("y", b);
  ExprPtr body = qt_exists(
      "x", fst(p), qt_exists("y", snd(p), eq(z, app(fv, pair(x, y)))));
  ExprPtr setb = abs("z", c, body);
  ExprPtr pc = abs("f", ft, abs("p", pt, setb));
  return app(pc, f);
}

ExprPtr monoid(const ExprPtr& m, const ExprPtr& f, const ExprPtr& e) {
  TypePtr a = set_elem_ty(m);
  std::string xn = safe_name("x", {m, f, e});
  std::string yn = safe_name("y", {m, f, e});
  std::string zn = safe_name("z", {m, f, e});
  ExprPtr x = var(xn, a), y = var(yn, a), z = var(zn, a);
  ExprPtr assoc = qt_forall(
      xn, m,
      qt_forall(yn, m,
                qt_forall(zn, m,
                          eq(app(f, pair(x, app(f, pair(y, z)))),
                             app(f, pair(app(f, pair(x, y)), z))))));
  ExprPtr ident = qt_forall(
      xn, m,
      eq_chain({app(f, pair(e, x)), app(f, pair(x, e)), x}));
  return conj({is_defined(m), neq(m, emp_set(a)),
               is_defined_in(f, fun_qty(prod_qty(m, m), m)),
               is_defined_in(e, m), assoc, ident});
}

ExprPtr com_monoid(const ExprPtr& m, const ExprPtr& f, const ExprPtr& e) {
  TypePtr a = set_elem_ty(m);
  std::string xn = safe_name("x", {m, f, e});
  std::string yn = safe_name("y", {m, f, e});
  ExprPtr x = var(xn, a), y = var(yn, a);
  ExprPtr comm = qt_forall(
      xn, m,
      qt_forall(yn, m, eq(app(f, pair(x, y)), app(f, pair(y, x)))));
  return and_(monoid(m, f, e), comm);
}

ExprPtr mon_action(const ExprPtr& m, const ExprPtr& s, const ExprPtr& f,
                   const ExprPtr& e, const ExprPtr& g) {
  TypePtr a = set_elem_ty(m);
  TypePtr b = set_elem_ty(s);
  std::string xn = safe_name("x", {m, s, f, e, g});
  std::string yn = safe_name("y", {m, s, f, e, g});
  std::string sn = safe_name("s", {m, s, f, e, g});
  ExprPtr x = var(xn, a), y = var(yn, a), sv = var(sn, b);
  ExprPtr compat_f = qt_forall(
      xn, m,
      qt_forall(
          yn, m,
          qt_forall(sn, s,
                    eq(app(g, pair(x, app(g, pair(y, sv)))),
                       app(g, pair(app(f, pair(x, y)), sv))))));
  ExprPtr compat_e = qt_forall(sn, s, eq(app(g, pair(e, sv)), sv));
  return conj({monoid(m, f, e), is_defined(s), neq(s, emp_set(b)),
               is_defined_in(g, fun_qty(prod_qty(m, s), s)), compat_f,
               compat_e});
}

ExprPtr mon_homom(const ExprPtr& m1, const ExprPtr& m2, const ExprPtr& f1,
                  const ExprPtr& e1, const ExprPtr& f2, const ExprPtr& e2,
                  const ExprPtr& h) {
  TypePtr a = set_elem_ty(m1);
  std::string xn = safe_name("x", {m1, m2, f1, e1, f2, e2, h});
  std::string yn = safe_name("y", {m1, m2, f1, e1, f2, e2, h});
  ExprPtr x = var(xn, a), y = var(yn, a);
  ExprPtr hom1 = qt_forall(
      xn, m1,
      qt_forall(yn, m1,
                eq(app(h, app(f1, pair(x, y))),
                   app(f2, pair(app(h, x), app(h, y))))));
  ExprPtr hom2 = eq(app(h, e1), e2);
  return conj({monoid(m1, f1, e1), monoid(m2, f2, e2),
               is_defined_in(h, fun_qty(m1, m2)), hom1, hom2});
}

namespace {

// closed applied-template heads of the connectives, built once
const ExprPtr& and_head() {
  static const ExprPtr p = and_(truth(), truth())->a->a;
  return p;
}
const ExprPtr& or_head() {
  static const ExprPtr p = or_(truth(), truth())->a->a;
  return p;
}
const ExprPtr& implies_head() {
  static const ExprPtr p = implies(truth(), truth())->a->a;
  return p;
}
const ExprPtr& not_head() {
  static const ExprPtr p = not_(truth())->a;
  return p;
}

bool match_bin(const ExprPtr& e, const ExprPtr& head, ExprPtr& a, ExprPtr& b) {
  if (e->tag != Expr::Tag::App || e->a->tag != Expr::Tag::App) return false;
  if (!alpha_eq(e->a->a, head)) return false;
  a = e->a->b;
  b = e->b;
  return true;
}

}  // namespace

bool match_forall(const ExprPtr& e, std::string& x, TypePtr& ty,
                  ExprPtr& body) {
  if (e->tag != Expr::Tag::Eq) return false;
  const ExprPtr &l = e->a, &r = e->b;
  if (l->tag != Expr::Tag::Abs || r->tag != Expr::Tag::Abs) return false;
  if (!type_eq(l->ty, r->ty)) return false;
  if (!alpha_eq(l, abs("x", l->ty, truth()))) return false;
  x = r->name;
  ty = r->ty;
  body = r->a;
  return true;
}

bool match_not(const ExprPtr& e, ExprPtr& arg) {
  if (e->tag != Expr::Tag::App || !alpha_eq(e->a, not_head())) return false;
  arg = e->b;
  return true;
}

bool match_and(const ExprPtr& e, ExprPtr& a, ExprPtr& b) {
  return match_bin(e, and_head(), a, b);
}

bool match_or(const ExprPtr& e, ExprPtr& a, ExprPtr& b) {
  return match_bin(e, or_head(), a, b);
}

bool match_implies(const ExprPtr& e, ExprPtr& a, ExprPtr& b) {
  return match_bin(e, implies_head(), a, b);
}

ExprPtr infix(const ExprPtr& c, const ExprPtr& a, const ExprPtr& b) {
  TypePtr t = infer_type(c);
  if (t->tag == Type::Tag::Fun && t->a->tag == Type::Tag::Prod)
    return app(c, pair(a, b));
  if (t->tag == Type::Tag::Fun && t->b->tag == Type::Tag::Fun)
    return app(app(c, a), b);
  throw TypeError("infix operator must be paired or curried, got " +
                  show_type(t));
}

}  // namespace alonzo::pc
