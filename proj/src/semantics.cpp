#include "alonzo/semantics.hpp"

#include "alonzo/builders.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alonzo {

namespace {

constexpr Val kMaxVal = std::numeric_limits<Val>::max();

std::optional<Val> mul_opt(Val a, Val b) {
  if (a == 0 || b == 0) return 0;
  if (a > kMaxVal / b) return std::nullopt;
  return a * b;
}

std::optional<Val> pow_opt(Val b, Val e) {
  Val r = 1;
  for (Val i = 0; i < e; ++i) {
    auto m = mul_opt(r, b);
    if (!m) return std::nullopt;
    r = *m;
  }
  return r;
}

}  // namespace

std::uint64_t SizeSpec::size_of(const std::string& base) const {
  auto it = base_sizes.find(base);
  if (it == base_sizes.end())
    throw BudgetExceeded("no size given for base type " + base);
  return it->second;
}

std::optional<Val> domain_card(const TypePtr& t, const SizeSpec& s) {
  switch (t->tag) {
    case Type::Tag::Bool:
      return 2;
    case Type::Tag::Base:
      return s.size_of(t->name);
    case Type::Tag::Prod: {
      auto a = domain_card(t->a, s), b = domain_card(t->b, s);
      if (!a || !b) return std::nullopt;
      return mul_opt(*a, *b);
    }
    case Type::Tag::Fun: {
      auto a = domain_card(t->a, s);
      if (!a) return std::nullopt;
      if (t->b->is_bool()) return pow_opt(2, *a);  // total predicates only
      auto b = domain_card(t->b, s);
      if (!b || *b == kMaxVal) return std::nullopt;
      return pow_opt(*b + 1, *a);  // partial functions: one extra "undefined" digit
    }
  }
  return std::nullopt;
}

Val iter_card(const TypePtr& t, const SizeSpec& s) {
  auto c = domain_card(t, s);
  if (!c)
    throw BudgetExceeded("domain of type " + show_type(t) +
                         " does not fit in an index");
  if (*c > s.domain_budget)
    throw BudgetExceeded("domain of type " + show_type(t) + " has " +
                         std::to_string(*c) + " elements, over the budget of " +
                         std::to_string(s.domain_budget));
  return *c;
}

const Val* Model::value_of(const std::string& name) const {
  for (const auto& [n, v] : consts)
    if (n == name) return &v;
  return nullptr;
}

namespace {

void needed_types(const TypePtr& t, std::set<std::string>& seen,
                  std::vector<TypePtr>& out) {
  std::string key = show_type(t);
  if (!seen.insert(key).second) return;
  if (t->is_fun() || t->is_prod()) {
    needed_types(t->a, seen, out);
    needed_types(t->b, seen, out);
  }
  out.push_back(t);
}

}  // namespace

std::vector<std::pair<std::string, std::optional<Val>>> frame_report(
    const Language& L, const SizeSpec& s) {
  std::set<std::string> seen;
  std::vector<TypePtr> types;
  {
    std::vector<TypePtr> tmp;
    needed_types(bool_ty(), seen, tmp);
    for (const auto& b : L.base_types) needed_types(base_ty(b), seen, tmp);
    for (const auto& [c, ty] : L.constants) needed_types(ty, seen, tmp);
    types = tmp;
  }
  std::vector<std::pair<std::string, std::optional<Val>>> report;
  report.reserve(types.size());
  for (const auto& t : types) report.emplace_back(show_type(t), domain_card(t, s));
  return report;
}

const TypePtr& Evaluator::type_of(const ExprPtr& e) {
  auto it = ty_memo_.find(e.get());
  if (it != ty_memo_.end()) return it->second.second;
  TypePtr t;
  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Const: t = e->ty; break;
    case Expr::Tag::Eq: type_of(e->a); type_of(e->b); t = bool_ty(); break;
    case Expr::Tag::App: t = type_of(e->a)->b; type_of(e->b); break;
    case Expr::Tag::Abs: t = fun_ty(e->ty, type_of(e->a)); break;
    case Expr::Tag::Iota: type_of(e->a); t = e->ty; break;
    case Expr::Tag::Pair: t = prod_ty(type_of(e->a), type_of(e->b)); break;
  }
  return ty_memo_.emplace(e.get(), std::make_pair(e, std::move(t)))
      .first->second.second;
}

std::optional<Val> Evaluator::ev(const ExprPtr& e,
                                 std::vector<std::pair<VarKey, Val>>& env) {
  const SizeSpec& s = model_.sizes;
  switch (e->tag) {
    case Expr::Tag::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first.name == e->name && type_eq(it->first.ty, e->ty))
          return it->second;
      throw std::logic_error("unassigned variable " + e->name);
    }
    case Expr::Tag::Const: {
      const Val* v = model_.value_of(e->name);
      if (!v) throw std::logic_error("uninterpreted constant " + e->name);
      return *v;
    }
    case Expr::Tag::Eq: {
      auto l = ev(e->a, env), r = ev(e->b, env);
      return (l && r && *l == *r) ? 1 : 0;  // equality with an undefined side is false
    }
    case Expr::Tag::App: {
      // A connective shape is evaluated directly on its operands; its
      // abstraction template would otherwise cost a table comparison
      // per evaluation.  An undefined operand makes the connective
      // false, like any other boolean application below.
      auto ci = conn_memo_.find(e.get());
      if (ci == conn_memo_.end()) {
        Conn c;
        c.self = e;
        if (pc::match_not(e, c.a))
          c.kind = Conn::Kind::Not;
        else if (pc::match_and(e, c.a, c.b))
          c.kind = Conn::Kind::And;
        else if (pc::match_or(e, c.a, c.b))
          c.kind = Conn::Kind::Or;
        else if (pc::match_implies(e, c.a, c.b))
          c.kind = Conn::Kind::Implies;
        ci = conn_memo_.emplace(e.get(), std::move(c)).first;
      }
      if (ci->second.kind != Conn::Kind::None) {
        const Conn& c = ci->second;
        auto l = ev(c.a, env);
        if (!l) return 0;
        if (c.kind == Conn::Kind::Not) return *l == 0 ? 1 : 0;
        auto r = ev(c.b, env);
        if (!r) return 0;
        switch (c.kind) {
          case Conn::Kind::And: return (*l && *r) ? 1 : 0;
          case Conn::Kind::Or: return (*l || *r) ? 1 : 0;
          default: return (!*l || *r) ? 1 : 0;
        }
      }
      bool to_bool = type_of(e->a)->b->is_bool();
      // digit lookup in an encoded function value
      auto apply_val = [&](Val fv, const TypePtr& fty,
                           Val xv) -> std::optional<Val> {
        bool tb = fty->b->is_bool();
        Val n = iter_card(fty->a, s);
        Val cod = 0, base = 2;
        if (!tb) {
          auto c = domain_card(fty->b, s);
          if (!c)
            throw BudgetExceeded("codomain of " + show_type(fty) +
                                 " too large");
          cod = *c;
          base = cod + 1;
        }
        auto p = pow_opt(base, n - 1 - xv);
        if (!p)
          throw BudgetExceeded("function index overflow for " +
                               show_type(fty));
        Val digit = (fv / *p) % base;
        if (tb) return digit;
        if (digit == cod) return std::nullopt;  // absent table entry
        return digit;
      };
      // Collect the application spine.  Abstraction heads are applied
      // by binding their arguments one by one: building the functions'
      // table values instead would blow the domain budget for applied
      // notational constants, whose argument types are often large.
      std::vector<const Expr*> nodes;  // App nodes, outermost first
      const ExprPtr* fp = &e;
      while ((*fp)->tag == Expr::Tag::App) {
        nodes.push_back(fp->get());
        fp = &(*fp)->a;
      }
      std::vector<Val> vals(nodes.size());
      for (size_t j = 0; j < nodes.size(); ++j) {
        auto v = ev(nodes[j]->b, env);
        // an application of type o falls back to falsehood instead of
        // being undefined; at any other type undefinedness propagates
        if (!v) return to_bool ? std::optional<Val>(0) : std::nullopt;
        vals[j] = *v;
      }
      size_t i = nodes.size(), pushed = 0;
      while (i > 0 && (*fp)->tag == Expr::Tag::Abs) {
        env.emplace_back(VarKey{(*fp)->name, (*fp)->ty}, vals[--i]);
        ++pushed;
        fp = &(*fp)->a;
      }
      std::optional<Val> out;
      try {
        out = ev(*fp, env);
      } catch (...) {
        env.resize(env.size() - pushed);
        throw;
      }
      env.resize(env.size() - pushed);
      // any arguments beyond the abstraction chain index into the value
      while (i > 0) {
        if (!out) return to_bool ? std::optional<Val>(0) : std::nullopt;
        --i;
        out = apply_val(*out, type_of(nodes[i]->a), vals[i]);
      }
      return out;
    }
    case Expr::Tag::Abs: {
      Val n = iter_card(e->ty, s);
      const TypePtr& bodyty = type_of(e->a);
      bool to_bool = bodyty->is_bool();
      Val cod = 0, base = 2;
      if (!to_bool) {
        auto c = domain_card(bodyty, s);
        if (!c)
          throw BudgetExceeded("codomain of abstraction body " +
                               show_type(bodyty) + " too large");
        cod = *c;
        base = cod + 1;
      }
      Val acc = 0;
      env.emplace_back(VarKey{e->name, e->ty}, 0);
      for (Val k = 0; k < n; ++k) {
        env.back().second = k;
        auto b = ev(e->a, env);
        Val digit = to_bool ? *b : (b ? *b : cod);
        auto m = mul_opt(acc, base);
        if (!m || *m > kMaxVal - digit) {
          env.pop_back();
          throw BudgetExceeded("function index overflow while building a " +
                               show_type(fun_ty(e->ty, bodyty)) + " value");
        }
        acc = *m + digit;
      }
      env.pop_back();
      return acc;
    }
    case Expr::Tag::Iota: {
      Val n = iter_card(e->ty, s);
      std::optional<Val> witness;
      env.emplace_back(VarKey{e->name, e->ty}, 0);
      for (Val k = 0; k < n; ++k) {
        env.back().second = k;
        auto b = ev(e->a, env);
        if (b && *b == 1) {
          if (witness) {  // more than one witness: undefined
            env.pop_back();
            return std::nullopt;
          }
          witness = k;
        }
      }
      env.pop_back();
      return witness;  // absent when no witness exists
    }
    case Expr::Tag::Pair: {
      auto l = ev(e->a, env), r = ev(e->b, env);
      if (!l || !r) return std::nullopt;  // a pair is defined iff both parts are
      auto cs = domain_card(type_of(e->b), s);
      if (!cs) throw BudgetExceeded("pair component domain too large");
      auto m = mul_opt(*l, *cs);
      if (!m || *m > kMaxVal - *r)
        throw BudgetExceeded("pair index overflow");
      return *m + *r;
    }
  }
  return std::nullopt;
}

std::optional<Val> Evaluator::eval(const ExprPtr& e) {
  std::vector<std::pair<VarKey, Val>> env;
  return ev(e, env);
}

std::optional<Val> Evaluator::eval(const ExprPtr& e,
                                   std::vector<std::pair<VarKey, Val>>& phi) {
  return ev(e, phi);
}

bool Evaluator::is_valid(const ExprPtr& sentence) {
  std::set<VarKey> fv = free_vars(sentence);
  std::vector<VarKey> vars(fv.begin(), fv.end());
  std::vector<Val> limits;
  limits.reserve(vars.size());
  for (const auto& v : vars) limits.push_back(iter_card(v.ty, model_.sizes));
  std::vector<std::pair<VarKey, Val>> env;
  for (const auto& v : vars) env.emplace_back(v, 0);
  // odometer over all assignments to the free variables
  for (;;) {
    auto r = ev(sentence, env);
    if (!r || *r != 1) return false;
    size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++env[i].second < limits[i]) break;
      env[i].second = 0;
      if (i == 0) return true;
    }
    if (vars.empty()) return true;
  }
}

namespace {

// Split a theory's constants into enumerated ones and ones pinned by a
// defining axiom c = definiens (evaluated, not enumerated).
struct EnumPlan {
  const Theory* theory;
  std::vector<std::pair<std::string, TypePtr>> enumerated;
  // Satisfaction steps in axiom order: a defining axiom c = definiens
  // pins the constant's value (computed, not enumerated), any other
  // axiom is checked.  Order matters twice over: a later axiom may
  // mention a pinned constant, and checking the cheap early axioms
  // first rejects most candidates before any definiens is evaluated.
  struct Step {
    std::string pinned;  // empty for a checked axiom
    ExprPtr expr;        // definiens, or the axiom to check
  };
  std::vector<Step> steps;
  std::vector<Val> radix;      // card per enumerated constant
  Val total = 1;               // number of candidate interpretations

  EnumPlan(const Theory& T, const SizeSpec& s) : theory(&T) {
    std::set<std::string> pinned;
    for (const auto& [label, ax] : T.axioms) {
      if (ax->tag == Expr::Tag::Eq && ax->a->tag == Expr::Tag::Const &&
          !pinned.count(ax->a->name)) {
        pinned.insert(ax->a->name);
        steps.push_back({ax->a->name, ax->b});
      } else {
        steps.push_back({"", ax});
      }
    }
    for (const auto& [c, ty] : T.language.constants)
      if (!pinned.count(c)) enumerated.emplace_back(c, ty);
    for (const auto& [c, ty] : enumerated) {
      Val r = iter_card(ty, s);
      radix.push_back(r);
      auto m = mul_opt(total, r);
      if (!m || *m > s.enumeration_budget)
        throw BudgetExceeded("interpretation space of theory " + T.name +
                             " exceeds the enumeration budget");
      total = *m;
    }
  }

  // Build the model for candidate index i; nullopt when i does not
  // satisfy the theory.
  std::optional<Model> realize(Val i, const SizeSpec& s) const {
    Model m;
    m.sizes = s;
    m.consts.resize(enumerated.size());
    for (size_t k = enumerated.size(); k-- > 0;) {
      m.consts[k] = {enumerated[k].first, i % radix[k]};
      i /= radix[k];
    }
    Evaluator ev(m);
    for (const Step& st : steps) {
      if (st.pinned.empty()) {
        if (!ev.is_valid(st.expr)) return std::nullopt;
      } else {
        auto v = ev.eval(st.expr);
        if (!v) return std::nullopt;  // defining axiom unsatisfiable here
        m.consts.emplace_back(st.pinned, *v);
      }
    }
    return m;
  }
};

}  // namespace

std::vector<Model> enumerate_models(const Theory& T, const SizeSpec& s,
                                    bool parallel) {
  EnumPlan plan(T, s);
  std::vector<Val> hits;
  std::string error;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::vector<Val> local;
      std::string local_error;
#pragma omp for schedule(dynamic, 256) nowait
      for (long long i = 0; i < static_cast<long long>(plan.total); ++i) {
        if (!local_error.empty()) continue;
        try {
          if (plan.realize(static_cast<Val>(i), s)) local.push_back(i);
        } catch (const std::exception& ex) {
          local_error = ex.what();
        }
      }
#pragma omp critical
      {
        hits.insert(hits.end(), local.begin(), local.end());
        if (!local_error.empty() && error.empty()) error = local_error;
      }
    }
    std::sort(hits.begin(), hits.end());
  } else
#endif
  {
    (void)parallel;
    for (Val i = 0; i < plan.total; ++i) {
      if (plan.realize(i, s)) hits.push_back(i);
    }
  }
  if (!error.empty()) throw BudgetExceeded(error);
  std::vector<Model> out;
  out.reserve(hits.size());
  for (Val i : hits) out.push_back(*plan.realize(i, s));
  return out;
}

CheckResult check_validity_at_scale(const Theory& T, const ExprPtr& sentence,
                                    const SizeSpec& s, bool parallel) {
  EnumPlan plan(T, s);
  CheckResult result;
  std::uint64_t models = 0;
  Val best = kMaxVal;  // smallest refuting candidate index
  std::string error;
#ifdef _OPENMP
  if (parallel) {
    std::atomic<Val> abest{kMaxVal};
#pragma omp parallel reduction(+ : models)
    {
      std::string local_error;
#pragma omp for schedule(dynamic, 256) nowait
      for (long long i = 0; i < static_cast<long long>(plan.total); ++i) {
        if (!local_error.empty()) continue;
        Val vi = static_cast<Val>(i);
        if (vi > abest.load(std::memory_order_relaxed)) continue;
        try {
          auto m = plan.realize(vi, s);
          if (!m) continue;
          ++models;
          Evaluator ev(*m);
          if (!ev.is_valid(sentence)) {
            Val cur = abest.load();
            while (vi < cur && !abest.compare_exchange_weak(cur, vi)) {
            }
          }
        } catch (const std::exception& ex) {
          local_error = ex.what();
        }
      }
#pragma omp critical
      if (!local_error.empty() && error.empty()) error = local_error;
    }
    best = abest.load();
  } else
#endif
  {
    (void)parallel;
    for (Val i = 0; i < plan.total; ++i) {
      auto m = plan.realize(i, s);
      if (!m) continue;
      ++models;
      Evaluator ev(*m);
      if (!ev.is_valid(sentence)) {
        best = i;
        break;  // ascending order: the first hit is minimal
      }
    }
  }
  if (!error.empty()) throw BudgetExceeded(error);
  if (best != kMaxVal) {
    result.refuted = true;
    result.countermodel = *plan.realize(best, s);
  }
  result.models_checked = models;
  return result;
}

nlohmann::ordered_json value_to_json(Val v, const TypePtr& ty,
                                     const SizeSpec& s) {
  using nlohmann::ordered_json;
  switch (ty->tag) {
    case Type::Tag::Bool:
      return v != 0;
    case Type::Tag::Base:
      return v;
    case Type::Tag::Prod: {
      Val cs = *domain_card(ty->b, s);
      return ordered_json::array(
          {value_to_json(v / cs, ty->a, s), value_to_json(v % cs, ty->b, s)});
    }
    case Type::Tag::Fun: {
      Val n = iter_card(ty->a, s);
      bool to_bool = ty->b->is_bool();
      Val cod = to_bool ? 0 : *domain_card(ty->b, s);
      Val base = to_bool ? 2 : cod + 1;
      ordered_json arr = ordered_json::array();
      for (Val k = 0; k < n; ++k) {
        Val digit = (v / *pow_opt(base, n - 1 - k)) % base;
        if (!to_bool && digit == cod)
          arr.push_back(nullptr);
        else
          arr.push_back(value_to_json(digit, ty->b, s));
      }
      return arr;
    }
  }
  return nullptr;
}

nlohmann::ordered_json model_to_json(const Model& m, const Language& L) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json sizes = ordered_json::object();
  for (const auto& [b, n] : m.sizes.base_sizes) sizes[b] = n;
  j["sizes"] = sizes;
  ordered_json consts = ordered_json::object();
  for (const auto& [c, v] : m.consts) {
    const TypePtr* ty = L.constant_type(c);
    if (ty) consts[c] = value_to_json(v, *ty, m.sizes);
  }
  j["constants"] = consts;
  return j;
}

}  // namespace alonzo
