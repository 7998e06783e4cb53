#include "alonzo/kernel.hpp"

#include <sstream>

namespace alonzo {

const TypePtr* Language::constant_type(const std::string& c) const {
  for (const auto& [name, ty] : constants)
    if (name == c) return &ty;
  return nullptr;
}

void Language::add_constant(const std::string& c, TypePtr ty) {
  constants.emplace_back(c, std::move(ty));
}

namespace {
int type_cmp(const TypePtr& x, const TypePtr& y) {
  if (x.get() == y.get()) return 0;
  if (static_cast<int>(x->tag) != static_cast<int>(y->tag))
    return static_cast<int>(x->tag) < static_cast<int>(y->tag) ? -1 : 1;
  switch (x->tag) {
    case Type::Tag::Bool: return 0;
    case Type::Tag::Base: return x->name.compare(y->name);
    case Type::Tag::Fun:
    case Type::Tag::Prod: {
      int c = type_cmp(x->a, y->a);
      return c != 0 ? c : type_cmp(x->b, y->b);
    }
  }
  return 0;
}
}  // namespace

bool VarKey::operator<(const VarKey& o) const {
  int c = name.compare(o.name);
  if (c != 0) return c < 0;
  return type_cmp(ty, o.ty) < 0;
}
bool VarKey::operator==(const VarKey& o) const {
  return name == o.name && type_eq(ty, o.ty);
}

TypePtr infer_type(const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Const:
      return e->ty;
    case Expr::Tag::Eq: {
      TypePtr l = infer_type(e->a), r = infer_type(e->b);
      if (!type_eq(l, r))
        throw TypeError("equality between distinct types " + show_type(l) +
                        " and " + show_type(r));
      return bool_ty();
    }
    case Expr::Tag::App: {
      TypePtr f = infer_type(e->a), x = infer_type(e->b);
      if (!f->is_fun())
        throw TypeError("application head has non-function type " + show_type(f));
      if (!type_eq(f->a, x))
        throw TypeError("argument type " + show_type(x) +
                        " does not match parameter type " + show_type(f->a));
      return f->b;
    }
    case Expr::Tag::Abs:
      return fun_ty(e->ty, infer_type(e->a));
    case Expr::Tag::Iota: {
      if (e->ty->is_bool())
        throw TypeError("description variable may not have type o");
      TypePtr body = infer_type(e->a);
      if (!body->is_bool())
        throw TypeError("description body must have type o, got " + show_type(body));
      return e->ty;
    }
    case Expr::Tag::Pair:
      return prod_ty(infer_type(e->a), infer_type(e->b));
  }
  throw TypeError("malformed expression");
}

namespace {
bool bases_in_language(const TypePtr& t, const Language& L) {
  switch (t->tag) {
    case Type::Tag::Bool: return true;
    case Type::Tag::Base: return L.has_base(t->name);
    case Type::Tag::Fun:
    case Type::Tag::Prod:
      return bases_in_language(t->a, L) && bases_in_language(t->b, L);
  }
  return false;
}
}  // namespace

bool check_in_language(const ExprPtr& e, const Language& L) {
  switch (e->tag) {
    case Expr::Tag::Var:
      return bases_in_language(e->ty, L);
    case Expr::Tag::Const: {
      const TypePtr* declared = L.constant_type(e->name);
      return declared != nullptr && type_eq(*declared, e->ty);
    }
    case Expr::Tag::Eq:
    case Expr::Tag::App:
    case Expr::Tag::Pair:
      return check_in_language(e->a, L) && check_in_language(e->b, L);
    case Expr::Tag::Abs:
    case Expr::Tag::Iota:
      return bases_in_language(e->ty, L) && check_in_language(e->a, L);
  }
  return false;
}

namespace {
void collect_free(const ExprPtr& e, std::set<VarKey>& bound, std::set<VarKey>& out) {
  switch (e->tag) {
    case Expr::Tag::Var: {
      VarKey k{e->name, e->ty};
      if (!bound.count(k)) out.insert(k);
      return;
    }
    case Expr::Tag::Const:
      return;
    case Expr::Tag::Eq:
    case Expr::Tag::App:
    case Expr::Tag::Pair:
      collect_free(e->a, bound, out);
      collect_free(e->b, bound, out);
      return;
    case Expr::Tag::Abs:
    case Expr::Tag::Iota: {
      VarKey k{e->name, e->ty};
      bool was_bound = bound.count(k) != 0;
      bound.insert(k);
      collect_free(e->a, bound, out);
      if (!was_bound) bound.erase(k);
      return;
    }
  }
}
}  // namespace

std::set<VarKey> free_vars(const ExprPtr& e) {
  std::set<VarKey> bound, out;
  collect_free(e, bound, out);
  return out;
}

bool is_closed(const ExprPtr& e) { return free_vars(e).empty(); }

std::string FreshGen::fresh(const std::string& base) {
  // strip any previous numeric suffix so renames do not pile up
  std::string stem = base;
  auto us = stem.rfind('_');
  if (us != std::string::npos &&
      us + 1 < stem.size() &&
      stem.find_first_not_of("0123456789", us + 1) == std::string::npos)
    stem = stem.substr(0, us);
  return stem + "_" + std::to_string(++counter);
}

namespace {
ExprPtr subst(const ExprPtr& e, const VarKey& x, const ExprPtr& a,
              const std::set<VarKey>& avoid, FreshGen& gen) {
  switch (e->tag) {
    case Expr::Tag::Var:
      return (VarKey{e->name, e->ty} == x) ? a : e;
    case Expr::Tag::Const:
      return e;
    case Expr::Tag::Eq:
      return eq(subst(e->a, x, a, avoid, gen), subst(e->b, x, a, avoid, gen));
    case Expr::Tag::App:
      return app(subst(e->a, x, a, avoid, gen), subst(e->b, x, a, avoid, gen));
    case Expr::Tag::Pair:
      return pair(subst(e->a, x, a, avoid, gen), subst(e->b, x, a, avoid, gen));
    case Expr::Tag::Abs:
    case Expr::Tag::Iota: {
      VarKey bv{e->name, e->ty};
      if (bv == x) return e;  // no free occurrence below
      auto rebuild = [&](const std::string& n, const ExprPtr& body) {
        return e->tag == Expr::Tag::Abs ? abs(n, e->ty, body)
                                        : iota(n, e->ty, body);
      };
      if (avoid.count(bv)) {
        // the binder would capture a free variable of the replacement
        std::string n = gen.fresh(e->name);
        while (avoid.count(VarKey{n, e->ty})) n = gen.fresh(e->name);
        ExprPtr renamed = subst(e->a, bv, var(n, e->ty), avoid, gen);
        return rebuild(n, subst(renamed, x, a, avoid, gen));
      }
      return rebuild(e->name, subst(e->a, x, a, avoid, gen));
    }
  }
  return e;
}
}  // namespace

ExprPtr substitute(const ExprPtr& e, const VarKey& x, const ExprPtr& a,
                   FreshGen& gen) {
  if (!type_eq(infer_type(a), x.ty))
    throw TypeError("substituting expression of type " +
                    show_type(infer_type(a)) + " for variable of type " +
                    show_type(x.ty));
  std::set<VarKey> avoid = free_vars(a);
  avoid.erase(x);
  return subst(e, x, a, avoid, gen);
}

ExprPtr substitute(const ExprPtr& e, const VarKey& x, const ExprPtr& a) {
  FreshGen gen;
  return substitute(e, x, a, gen);
}

namespace {
bool aeq(const ExprPtr& x, const ExprPtr& y,
         std::map<VarKey, unsigned>& lx, std::map<VarKey, unsigned>& ly,
         unsigned depth) {
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Expr::Tag::Var: {
      if (!type_eq(x->ty, y->ty)) return false;
      auto ix = lx.find(VarKey{x->name, x->ty});
      auto iy = ly.find(VarKey{y->name, y->ty});
      if ((ix == lx.end()) != (iy == ly.end())) return false;
      if (ix == lx.end()) return x->name == y->name;  // both free
      return ix->second == iy->second;
    }
    case Expr::Tag::Const:
      return x->name == y->name && type_eq(x->ty, y->ty);
    case Expr::Tag::Eq:
    case Expr::Tag::App:
    case Expr::Tag::Pair:
      return aeq(x->a, y->a, lx, ly, depth) && aeq(x->b, y->b, lx, ly, depth);
    case Expr::Tag::Abs:
    case Expr::Tag::Iota: {
      if (!type_eq(x->ty, y->ty)) return false;
      VarKey kx{x->name, x->ty}, ky{y->name, y->ty};
      auto px = lx.find(kx);
      auto py = ly.find(ky);
      bool hx = px != lx.end();
      bool hy = py != ly.end();
      unsigned ox = hx ? px->second : 0, oy = hy ? py->second : 0;
      lx[kx] = depth;
      ly[ky] = depth;
      bool r = aeq(x->a, y->a, lx, ly, depth + 1);
      if (hx) lx[kx] = ox; else lx.erase(kx);
      if (hy) ly[ky] = oy; else ly.erase(ky);
      return r;
    }
  }
  return false;
}
}  // namespace

bool alpha_eq(const ExprPtr& x, const ExprPtr& y) {
  std::map<VarKey, unsigned> lx, ly;
  return aeq(x, y, lx, ly, 1);
}

namespace {
// one normal-order step; returns nullptr when already in normal form
ExprPtr step(const ExprPtr& e, FreshGen& gen) {
  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Const:
      return nullptr;
    case Expr::Tag::App: {
      if (e->a->tag == Expr::Tag::Abs)
        return substitute(e->a->a, VarKey{e->a->name, e->a->ty}, e->b, gen);
      if (ExprPtr f = step(e->a, gen)) return app(f, e->b);
      if (ExprPtr x = step(e->b, gen)) return app(e->a, x);
      return nullptr;
    }
    case Expr::Tag::Eq: {
      if (ExprPtr l = step(e->a, gen)) return eq(l, e->b);
      if (ExprPtr r = step(e->b, gen)) return eq(e->a, r);
      return nullptr;
    }
    case Expr::Tag::Pair: {
      if (ExprPtr l = step(e->a, gen)) return pair(l, e->b);
      if (ExprPtr r = step(e->b, gen)) return pair(e->a, r);
      return nullptr;
    }
    case Expr::Tag::Abs: {
      if (ExprPtr b = step(e->a, gen)) return abs(e->name, e->ty, b);
      return nullptr;
    }
    case Expr::Tag::Iota: {
      if (ExprPtr b = step(e->a, gen)) return iota(e->name, e->ty, b);
      return nullptr;
    }
  }
  return nullptr;
}
}  // namespace

ExprPtr beta_reduce(const ExprPtr& e, unsigned long budget) {
  infer_type(e);  // reject ill-typed input up front
  FreshGen gen;
  ExprPtr cur = e;
  for (unsigned long i = 0; i < budget; ++i) {
    ExprPtr next = step(cur, gen);
    if (!next) return cur;
    cur = next;
  }
  throw TypeError("beta reduction exceeded step budget");
}

std::string show_expr(const ExprPtr& e) {
  std::ostringstream os;
  switch (e->tag) {
    case Expr::Tag::Var: os << e->name; break;
    case Expr::Tag::Const: os << e->name; break;
    case Expr::Tag::Eq:
      os << "(" << show_expr(e->a) << " = " << show_expr(e->b) << ")";
      break;
    case Expr::Tag::App:
      os << "(" << show_expr(e->a) << " " << show_expr(e->b) << ")";
      break;
    case Expr::Tag::Abs:
      os << "(\\" << e->name << ":" << show_type(e->ty) << ". "
         << show_expr(e->a) << ")";
      break;
    case Expr::Tag::Iota:
      os << "(I " << e->name << ":" << show_type(e->ty) << ". "
         << show_expr(e->a) << ")";
      break;
    case Expr::Tag::Pair:
      os << "(" << show_expr(e->a) << ", " << show_expr(e->b) << ")";
      break;
  }
  return os.str();
}

}  // namespace alonzo
