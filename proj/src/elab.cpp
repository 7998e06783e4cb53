#include "alonzo/surface.hpp"

namespace alonzo {

namespace {

[[noreturn]] void err(const SPtr& n, const std::string& msg) {
  throw ParseError("line " + std::to_string(n->line) + ": " + msg);
}

// The quasitype denoted by a carrier: a plain type lifts to its
// universal set.
ExprPtr lift(const Carrier& c) {
  return c.qty ? c.qty : pc::univ_set(c.ty);
}

// The natural-number machinery a language must provide before the
// sequence builtins (nil, seq, lists, cons, append) can be used.
struct NatSystem {
  TypePtr r;
  ExprPtr n, zero, succ, pred, leq;
};

NatSystem nat_system(const SPtr& at, const Language& L) {
  auto want = [&](const std::string& c) -> ExprPtr {
    const TypePtr* t = L.constant_type(c);
    if (!t)
      err(at, "sequence builtins need the constants N, 0, S, P, <=R (missing '" +
                  c + "')");
    return cnst(c, *t);
  };
  NatSystem ns;
  ns.zero = want("0");
  if (!ns.zero->ty->is_base())
    err(at, "the constant 0 must have a base type");
  ns.r = ns.zero->ty;
  ns.n = want("N");
  ns.succ = want("S");
  ns.pred = want("P");
  ns.leq = want("<=R");
  if (!type_eq(ns.n->ty, set_ty(ns.r)) ||
      !type_eq(ns.succ->ty, fun_ty(ns.r, ns.r)) ||
      !type_eq(ns.pred->ty, fun_ty(ns.r, ns.r)) ||
      !type_eq(ns.leq->ty, fun_ty(prod_ty(ns.r, ns.r), bool_ty())))
    err(at, "N, S, P, <=R have unexpected types for the sequence builtins");
  return ns;
}

// seq(b): the partial functions from the naturals into b.
ExprPtr seq_set(const NatSystem& ns, const TypePtr& b) {
  return pc::fun_qty(ns.n, pc::univ_set(b));
}

// lists(b): the members of seq(b) defined exactly below some bound.
ExprPtr lists_set(const NatSystem& ns, const TypePtr& b) {
  ExprPtr s = var("s", fun_ty(ns.r, b));
  ExprPtr m = var("m", ns.r);
  ExprPtr n = var("n", ns.r);
  ExprPtr bound = pc::qt_forall(
      "m", ns.n,
      pc::iff(pc::is_defined(app(s, m)),
              app(ns.leq, pair(m, app(ns.pred, n)))));
  return abs("s", fun_ty(ns.r, b),
             pc::and_(pc::member(s, seq_set(ns, b)),
                      pc::qt_exists("n", ns.n, bound)));
}

// cons as a function: \x:b. \s:seq(b). \i:N. if i = 0 then x else s (P i)
ExprPtr cons_fun(const NatSystem& ns, const TypePtr& b) {
  ExprPtr x = var("x", b);
  ExprPtr s = var("s", fun_ty(ns.r, b));
  ExprPtr i = var("i", ns.r);
  ExprPtr body = pc::if_(eq(i, ns.zero), x, app(s, app(ns.pred, i)));
  return abs("x", b,
             pc::qt_abs("s", seq_set(ns, b), pc::qt_abs("i", ns.n, body)));
}

// append(b): the operation on lists(b) with the usual nil/cons equations.
ExprPtr append_fun(const NatSystem& ns, const TypePtr& b) {
  ExprPtr lists = lists_set(ns, b);
  ExprPtr nil = pc::emp_fun(ns.r, b);
  ExprPtr cons = cons_fun(ns, b);
  TypePtr lty = fun_ty(ns.r, b);
  ExprPtr f = var("f", fun_ty(prod_ty(lty, lty), lty));
  ExprPtr x = var("x", b);
  ExprPtr s = var("s", lty);
  ExprPtr t = var("t", lty);
  ExprPtr nil_unit =
      pc::qt_forall("t", lists, eq(app(f, pair(nil, t)), t));
  ExprPtr cons_step = pc::forall(
      "x", b,
      pc::qt_forall(
          "s", lists,
          pc::qt_forall("t", lists,
                        eq(app(f, pair(app(app(cons, x), s), t)),
                           app(app(cons, x), app(f, pair(s, t)))))));
  return pc::qt_iota("f", pc::fun_qty(pc::prod_qty(lists, lists), lists),
                     pc::and_(nil_unit, cons_step));
}

ExprPtr resolve_id(const SPtr& n, const std::string& name, ElabContext& ctx) {
  if (const TypePtr* vt = ctx.lookup_var(name)) return var(name, *vt);
  if (ctx.language)
    if (const TypePtr* ct = ctx.language->constant_type(name))
      return cnst(name, *ct);
  if (name == "T") return pc::truth();
  if (name == "F") return pc::falsity();
  err(n, "unknown identifier '" + name + "'");
}

TypePtr plain_arg(const SPtr& call, const Carrier& c) {
  if (!c.is_plain())
    err(call, call->text + " needs a plain type argument, not a quasitype");
  return c.ty;
}

ExprPtr elab_builtin(const SPtr& n, ElabContext& ctx) {
  const std::string& w = n->text;
  // builtins whose arguments are domains
  if (n->kind == SNode::Kind::Annot || w == "FunQ" || w == "ProdQ" ||
      w == "SetQ") {
    std::vector<Carrier> cs;
    for (const SPtr& k : n->kids) cs.push_back(elaborate_domain(k, ctx));
    if (w == "UnivSet") return cs[0].is_plain() ? pc::univ_set(cs[0].ty) : cs[0].qty;
    if (w == "EmpSet") return pc::emp_set(cs[0].ty);
    if (w == "Bot") return pc::bot(cs[0].ty);
    if (w == "Id") return pc::id_fun(plain_arg(n, cs[0]));
    if (w == "EmpFun")
      return pc::emp_fun(plain_arg(n, cs[0]), plain_arg(n, cs[1]));
    if (w == "FunCompPair")
      return pc::fun_comp_pair(plain_arg(n, cs[0]), plain_arg(n, cs[1]),
                               plain_arg(n, cs[2]));
    if (w == "FunAppPair")
      return pc::fun_app_pair(plain_arg(n, cs[0]), plain_arg(n, cs[1]));
    if (w == "FunQ") {
      if (cs[1].is_plain() && cs[1].ty->is_bool())
        return pc::fun_qty_pred(lift(cs[0]));
      return pc::fun_qty(lift(cs[0]), lift(cs[1]));
    }
    if (w == "ProdQ") return pc::prod_qty(lift(cs[0]), lift(cs[1]));
    if (w == "SetQ") return pc::set_qty(lift(cs[0]));
    // the sequence machinery
    NatSystem ns = nat_system(n, *ctx.language);
    TypePtr b = plain_arg(n, cs[0]);
    if (w == "nil") return pc::emp_fun(ns.r, b);
    if (w == "seq") return seq_set(ns, b);
    if (w == "lists") return lists_set(ns, b);
    if (w == "append") return append_fun(ns, b);
    err(n, "unhandled builtin '" + w + "'");
  }
  // builtins whose arguments are terms
  std::vector<ExprPtr> as;
  for (const SPtr& k : n->kids) as.push_back(elaborate(k, ctx));
  if (w == "Fst") return pc::fst(as[0]);
  if (w == "Snd") return pc::snd(as[0]);
  if (w == "TOTAL") return pc::total(as[0]);
  if (w == "set-op") return pc::set_op(as[0]);
  if (w == "cons") {
    NatSystem ns = nat_system(n, *ctx.language);
    return app(app(cons_fun(ns, infer_type(as[0])), as[0]), as[1]);
  }
  if (w == "MONOID") return pc::monoid(as[0], as[1], as[2]);
  if (w == "COM-MONOID") return pc::com_monoid(as[0], as[1], as[2]);
  if (w == "MON-ACTION")
    return pc::mon_action(as[0], as[1], as[2], as[3], as[4]);
  if (w == "MON-HOMOM")
    return pc::mon_homom(as[0], as[1], as[2], as[3], as[4], as[5], as[6]);
  err(n, "unhandled builtin '" + w + "'");
}

ExprPtr elab_bound(const SPtr& n, ElabContext& ctx) {
  const SBinder& b = n->binders.at(0);
  if (n->kind == SNode::Kind::Iota && b.names.size() != 1)
    err(n, "a definite description binds exactly one variable");
  Carrier c = elaborate_domain(b.domain, ctx);
  for (const std::string& name : b.names) ctx.scope.emplace_back(name, c.ty);
  ExprPtr body = elaborate(n->kids[0], ctx);
  ctx.scope.resize(ctx.scope.size() - b.names.size());
  for (size_t i = b.names.size(); i-- > 0;) {
    const std::string& x = b.names[i];
    switch (n->kind) {
      case SNode::Kind::Lam:
        body = c.is_plain() ? abs(x, c.ty, body) : pc::qt_abs(x, c.qty, body);
        break;
      case SNode::Kind::Iota:
        body = c.is_plain() ? iota(x, c.ty, body) : pc::qt_iota(x, c.qty, body);
        break;
      case SNode::Kind::Forall:
        body = c.is_plain() ? pc::forall(x, c.ty, body)
                            : pc::qt_forall(x, c.qty, body);
        break;
      default:
        body = c.is_plain() ? pc::exists(x, c.ty, body)
                            : pc::qt_exists(x, c.qty, body);
        break;
    }
  }
  return body;
}

}  // namespace

const TypePtr* ElabContext::lookup_var(const std::string& n) const {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it)
    if (it->first == n) return &it->second;
  return nullptr;
}

Carrier elaborate_domain(const SPtr& n, ElabContext& ctx) {
  switch (n->kind) {
    case SNode::Kind::DomBool:
      return {bool_ty(), nullptr};
    case SNode::Kind::DomName: {
      if (ctx.language && ctx.language->has_base(n->text))
        return {base_ty(n->text), nullptr};
      ExprPtr q = resolve_id(n, n->text, ctx);
      TypePtr qt = infer_type(q);
      if (!is_set_type(qt))
        err(n, "'" + n->text + "' is neither a base type nor a set-typed term");
      return {qt->a, q};
    }
    case SNode::Kind::DomSet: {
      Carrier c = elaborate_domain(n->kids[0], ctx);
      if (c.is_plain()) return {set_ty(c.ty), nullptr};
      return {set_ty(c.ty), pc::set_qty(c.qty)};
    }
    case SNode::Kind::DomFun: {
      Carrier d = elaborate_domain(n->kids[0], ctx);
      Carrier c = elaborate_domain(n->kids[1], ctx);
      if (d.is_plain() && c.is_plain()) return {fun_ty(d.ty, c.ty), nullptr};
      if (c.is_plain() && c.ty->is_bool())
        return {set_ty(d.ty), pc::fun_qty_pred(lift(d))};
      return {fun_ty(d.ty, c.ty), pc::fun_qty(lift(d), lift(c))};
    }
    case SNode::Kind::DomProd: {
      Carrier a = elaborate_domain(n->kids[0], ctx);
      Carrier b = elaborate_domain(n->kids[1], ctx);
      if (a.is_plain() && b.is_plain()) return {prod_ty(a.ty, b.ty), nullptr};
      return {prod_ty(a.ty, b.ty), pc::prod_qty(lift(a), lift(b))};
    }
    case SNode::Kind::DomTerm: {
      ExprPtr q = elaborate(n->kids[0], ctx);
      TypePtr qt = infer_type(q);
      if (!is_set_type(qt)) err(n, "domain term is not set-typed");
      return {qt->a, q};
    }
    default:
      err(n, "expected a type or quasitype");
  }
}

ExprPtr elaborate(const SPtr& n, ElabContext& ctx) {
  switch (n->kind) {
    case SNode::Kind::Id:
      return resolve_id(n, n->text, ctx);
    case SNode::Kind::Call:
    case SNode::Kind::Annot:
      return elab_builtin(n, ctx);
    case SNode::Kind::App:
      return app(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::EqChain: {
      std::vector<ExprPtr> items;
      for (const SPtr& k : n->kids) items.push_back(elaborate(k, ctx));
      if (items.size() == 2) return eq(items[0], items[1]);
      return pc::eq_chain(items);
    }
    case SNode::Kind::QuasiEq:
      return pc::quasi_eq(elaborate(n->kids[0], ctx),
                          elaborate(n->kids[1], ctx));
    case SNode::Kind::In:
      return pc::member(elaborate(n->kids[0], ctx),
                        elaborate(n->kids[1], ctx));
    case SNode::Kind::Infix:
      return pc::infix(resolve_id(n, n->text, ctx),
                       elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::Restrict:
      return pc::restrict_(elaborate(n->kids[0], ctx),
                           elaborate(n->kids[1], ctx));
    case SNode::Kind::IsDef:
      return pc::is_defined(elaborate(n->kids[0], ctx));
    case SNode::Kind::IsDefIn:
      return pc::is_defined_in(elaborate(n->kids[0], ctx),
                               elaborate(n->kids[1], ctx));
    case SNode::Kind::Not:
      return pc::not_(elaborate(n->kids[0], ctx));
    case SNode::Kind::And:
      return pc::and_(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::Or:
      return pc::or_(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::Implies:
      return pc::implies(elaborate(n->kids[0], ctx),
                         elaborate(n->kids[1], ctx));
    case SNode::Kind::Iff:
      return pc::iff(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::Lam:
    case SNode::Kind::Iota:
    case SNode::Kind::Forall:
    case SNode::Kind::Exists:
      return elab_bound(n, ctx);
    case SNode::Kind::If:
      return pc::if_(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx),
                     elaborate(n->kids[2], ctx));
    case SNode::Kind::Pair:
      return pair(elaborate(n->kids[0], ctx), elaborate(n->kids[1], ctx));
    case SNode::Kind::FinSet: {
      std::vector<ExprPtr> elems;
      for (const SPtr& k : n->kids) elems.push_back(elaborate(k, ctx));
      return pc::fin_set(elems);
    }
    case SNode::Kind::SetBuilder: {
      const SBinder& b = n->binders.at(0);
      Carrier c = elaborate_domain(b.domain, ctx);
      ctx.scope.emplace_back(b.names[0], c.ty);
      ExprPtr pred = elaborate(n->kids[0], ctx);
      ctx.scope.pop_back();
      ExprPtr x = var(b.names[0], c.ty);
      if (!c.is_plain()) pred = pc::and_(pc::member(x, c.qty), pred);
      return abs(b.names[0], c.ty, pred);
    }
    default:
      err(n, "expected a term, found a type");
  }
}

ExprPtr elaborate_term(const std::string& text, const Language& L) {
  ElabContext ctx;
  ctx.language = &L;
  ExprPtr e = elaborate(parse_term(text), ctx);
  infer_type(e);  // surface elaboration must produce well-typed terms
  return e;
}

TypePtr elaborate_type(const std::string& text, const Language& L) {
  ElabContext ctx;
  ctx.language = &L;
  Carrier c = elaborate_domain(parse_domain(text), ctx);
  if (!c.is_plain())
    throw ParseError("expected a plain type, found a quasitype: " + text);
  return c.ty;
}

}  // namespace alonzo
