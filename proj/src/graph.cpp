#include <algorithm>
#include <cctype>
#include <sstream>

#include "alonzo/graph.hpp"

namespace alonzo {

namespace {

ExprPtr lift(const Carrier& c) {
  return c.qty ? c.qty : pc::univ_set(c.ty);
}

// Recognize the applied pseudoconstant templates of the builder layer
// (universal and empty sets, the quasitype formers, projections,
// restriction, enumerated sets, conditionals) and rebuild them from the
// translated parts.  Rebuilding keeps translated sentences in the same
// simplified, logically equivalent shape the notation layer produces,
// instead of relativizing through the template internals.  Returns
// nullptr when the expression has no recognized shape.
ExprPtr rebuild_template(const Translation& t, const Language& tgt,
                         const ExprPtr& e) {
  auto tx = [&](const ExprPtr& x) { return translate_expr(t, tgt, x); };
  // a candidate template that does not even typecheck on these
  // arguments simply does not match; it must not abort later probes
  auto same = [&](auto mk) {
    try {
      return alpha_eq(e, mk());
    } catch (const TypeError&) {
      return false;
    }
  };
  try {
    switch (e->tag) {
      case Expr::Tag::Abs: {
        if (alpha_eq(e->a, pc::truth()))
          return lift(translate_carrier(t, e->ty));
        if (alpha_eq(e->a, pc::falsity()))
          return pc::emp_set(translate_type(t, e->ty));
        std::string x;
        TypePtr ty;
        ExprPtr body, c, d, m1, m2;
        if (pc::match_forall(e->a, x, ty, body)) {
          // fun_qty: \f:a->b. forall x:a. (f x)! => (x in Q /\ f x in T)
          if (pc::match_implies(body, d, c) && pc::match_and(c, m1, m2) &&
              m1->tag == Expr::Tag::App && m2->tag == Expr::Tag::App &&
              same([&] { return pc::fun_qty(m1->a, m2->a); }))
            return pc::fun_qty(tx(m1->a), tx(m2->a));
          // fun_qty_pred: \s:{a}. s subset Q
          if (pc::match_implies(body, m1, m2) && m2->tag == Expr::Tag::App &&
              same([&] { return pc::fun_qty_pred(m2->a); }))
            return pc::fun_qty_pred(tx(m2->a));
        }
        // prod_qty: \p:a*b. fst p in Q /\ snd p in T
        if (pc::match_and(e->a, m1, m2) && m1->tag == Expr::Tag::App &&
            m2->tag == Expr::Tag::App && same([&] { return pc::prod_qty(m1->a, m2->a); }))
          return pc::prod_qty(tx(m1->a), tx(m2->a));
        return nullptr;
      }
      case Expr::Tag::Iota: {
        if (same([&] { return pc::bot(e->ty); })) return pc::bot(translate_type(t, e->ty));
        // if-then-else at a non-boolean type
        ExprPtr i1, i2, c1, eqa, nc, eqb;
        if (pc::match_and(e->a, i1, i2) && pc::match_implies(i1, c1, eqa) &&
            pc::match_implies(i2, nc, eqb) && eqa->tag == Expr::Tag::Eq &&
            eqb->tag == Expr::Tag::Eq && same([&] { return pc::if_(c1, eqa->b, eqb->b); }))
          return pc::if_(tx(c1), tx(eqa->b), tx(eqb->b));
        return nullptr;
      }
      case Expr::Tag::App: {
        std::vector<ExprPtr> args;
        ExprPtr h = e;
        while (h->tag == Expr::Tag::App) {
          args.push_back(h->b);
          h = h->a;
        }
        if (h->tag != Expr::Tag::Abs) return nullptr;
        std::reverse(args.begin(), args.end());
        if (args.size() == 1) {
          if (same([&] { return pc::fst(args[0]); })) return pc::fst(tx(args[0]));
          if (same([&] { return pc::snd(args[0]); })) return pc::snd(tx(args[0]));
          if (same([&] { return pc::set_op(args[0]); })) return pc::set_op(tx(args[0]));
        }
        if (args.size() == 2 && same([&] { return pc::restrict_(args[0], args[1]); }))
          return pc::restrict_(tx(args[0]), tx(args[1]));
        if (same([&] { return pc::fin_set(args); })) {
          std::vector<ExprPtr> ta;
          for (const ExprPtr& a : args) ta.push_back(tx(a));
          return pc::fin_set(ta);
        }
        return nullptr;
      }
      default:
        return nullptr;
    }
  } catch (const TypeError&) {
    return nullptr;
  }
}

}  // namespace

TypePtr translate_type(const Translation& t, const TypePtr& ty) {
  switch (ty->tag) {
    case Type::Tag::Bool:
      return bool_ty();
    case Type::Tag::Base: {
      const Carrier* c = t.base_image(ty->name);
      if (!c)
        throw TypeError("translation " + t.name + " has no image for base " +
                        ty->name);
      return c->ty;
    }
    case Type::Tag::Fun:
      return fun_ty(translate_type(t, ty->a), translate_type(t, ty->b));
    case Type::Tag::Prod:
      return prod_ty(translate_type(t, ty->a), translate_type(t, ty->b));
  }
  throw TypeError("bad type");
}

Carrier translate_carrier(const Translation& t, const TypePtr& ty) {
  switch (ty->tag) {
    case Type::Tag::Bool:
      return {bool_ty(), nullptr};
    case Type::Tag::Base: {
      const Carrier* c = t.base_image(ty->name);
      if (!c)
        throw TypeError("translation " + t.name + " has no image for base " +
                        ty->name);
      return *c;
    }
    case Type::Tag::Fun: {
      Carrier d = translate_carrier(t, ty->a);
      Carrier c = translate_carrier(t, ty->b);
      if (d.is_plain() && c.is_plain()) return {fun_ty(d.ty, c.ty), nullptr};
      if (c.is_plain() && c.ty->is_bool())
        return {set_ty(d.ty), pc::fun_qty_pred(lift(d))};
      return {fun_ty(d.ty, c.ty), pc::fun_qty(lift(d), lift(c))};
    }
    case Type::Tag::Prod: {
      Carrier a = translate_carrier(t, ty->a);
      Carrier b = translate_carrier(t, ty->b);
      if (a.is_plain() && b.is_plain()) return {prod_ty(a.ty, b.ty), nullptr};
      return {prod_ty(a.ty, b.ty), pc::prod_qty(lift(a), lift(b))};
    }
  }
  throw TypeError("bad type");
}

ExprPtr translate_expr(const Translation& t, const Language& tgt,
                       const ExprPtr& e) {
  // universal quantification relativizes to the image carrier
  std::string x;
  TypePtr ty;
  ExprPtr body;
  if (pc::match_forall(e, x, ty, body)) {
    Carrier c = translate_carrier(t, ty);
    // the degenerate `forall x:ty. T` is the definedness of the
    // universal set; keep it an equation so it stays trivial when the
    // carrier is a proper quasitype
    if (alpha_eq(body, pc::truth())) {
      ExprPtr u = lift(c);
      return eq(u, u);
    }
    // likewise `forall x:ty. F` is the equation of the universal set
    // with the empty set; keep that shape so its negation stays the
    // nonemptiness of the image carrier
    if (alpha_eq(body, pc::falsity()))
      return eq(lift(c), pc::emp_set(translate_type(t, ty)));
    ExprPtr tb = translate_expr(t, tgt, body);
    return c.is_plain() ? pc::forall(x, c.ty, tb)
                        : pc::qt_forall(x, c.qty, tb);
  }
  if (ExprPtr r = rebuild_template(t, tgt, e)) return r;
  switch (e->tag) {
    case Expr::Tag::Var:
      return var(e->name, translate_type(t, e->ty));
    case Expr::Tag::Const: {
      if (const ExprPtr* img = t.const_image(e->name)) return *img;
      TypePtr tty = translate_type(t, e->ty);
      if (const TypePtr* have = tgt.constant_type(e->name))
        if (type_eq(*have, tty)) return cnst(e->name, tty);
      throw TypeError("translation " + t.name + " has no image for constant " +
                      e->name);
    }
    case Expr::Tag::Eq:
      return eq(translate_expr(t, tgt, e->a), translate_expr(t, tgt, e->b));
    case Expr::Tag::App:
      return app(translate_expr(t, tgt, e->a), translate_expr(t, tgt, e->b));
    case Expr::Tag::Pair:
      return pair(translate_expr(t, tgt, e->a), translate_expr(t, tgt, e->b));
    case Expr::Tag::Abs: {
      Carrier c = translate_carrier(t, e->ty);
      ExprPtr tb = translate_expr(t, tgt, e->a);
      return c.is_plain() ? abs(e->name, c.ty, tb)
                          : pc::qt_abs(e->name, c.qty, tb);
    }
    case Expr::Tag::Iota: {
      Carrier c = translate_carrier(t, e->ty);
      ExprPtr tb = translate_expr(t, tgt, e->a);
      return c.is_plain() ? iota(e->name, c.ty, tb)
                          : pc::qt_iota(e->name, c.qty, tb);
    }
  }
  throw TypeError("bad expression");
}

std::vector<Obligation> obligations(const ModuleStore& store,
                                    const Translation& t) {
  const Theory& S = store.theory(t.src);
  Theory ctx = store.discharge_context(t);
  std::vector<Obligation> out;
  for (const std::string& b : S.language.base_types) {
    const Carrier* c = t.base_image(b);
    if (!c || c->is_plain()) continue;
    TypePtr bt = base_ty(b);
    ExprPtr sentence = translate_expr(
        t, ctx.language, pc::neq(pc::univ_set(bt), pc::emp_set(bt)));
    out.push_back({Obligation::Kind::BaseNonEmpty, b, sentence, {}});
  }
  for (const auto& [name, cty] : S.language.constants) {
    if (!t.const_image(name)) continue;
    ExprPtr sentence = translate_expr(
        t, ctx.language,
        pc::is_defined_in(cnst(name, cty), pc::univ_set(cty)));
    out.push_back({Obligation::Kind::ConstDefined, name, sentence, {}});
  }
  for (const auto& [label, ax] : S.axioms)
    out.push_back({Obligation::Kind::Axiom, label,
                   translate_expr(t, ctx.language, ax), {}});
  return out;
}

namespace {

// terms whose denotation can never be undefined
bool obviously_defined(const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Abs:
    case Expr::Tag::Var:
    case Expr::Tag::Eq:
    // every model interprets each constant by a domain element
    case Expr::Tag::Const:
      return true;
    case Expr::Tag::Pair:
      return obviously_defined(e->a) && obviously_defined(e->b);
    default:
      break;
  }
  try {
    ExprPtr r = beta_reduce(e, 2000);
    return r->tag == Expr::Tag::Abs ||
           (r->tag == Expr::Tag::Pair && obviously_defined(r));
  } catch (const TypeError&) {
    return false;
  }
}

struct Clause {
  std::vector<std::pair<std::string, TypePtr>> prefix;
  ExprPtr body;
};

void split_conjuncts(const ExprPtr& e,
                     const std::vector<std::pair<std::string, TypePtr>>& pre,
                     std::vector<Clause>& out) {
  ExprPtr a, b;
  if (pc::match_and(e, a, b)) {
    split_conjuncts(a, pre, out);
    split_conjuncts(b, pre, out);
    return;
  }
  out.push_back({pre, e});
}

std::vector<Clause> split_sentence(const ExprPtr& sentence) {
  std::vector<std::pair<std::string, TypePtr>> pre;
  ExprPtr e = sentence;
  std::string x;
  TypePtr ty;
  ExprPtr body;
  while (pc::match_forall(e, x, ty, body)) {
    pre.emplace_back(x, ty);
    e = body;
  }
  std::vector<Clause> out;
  split_conjuncts(e, pre, out);
  return out;
}

// rebuild a sentence, keeping only the prefix variables the body uses
ExprPtr rewrap(const Clause& c) {
  ExprPtr out = c.body;
  for (size_t i = c.prefix.size(); i-- > 0;) {
    const auto& [x, ty] = c.prefix[i];
    auto fv = free_vars(out);
    if (fv.count(VarKey{x, ty})) out = pc::forall(x, ty, out);
  }
  return out;
}

bool same_prefix(const Clause& a, const Clause& b) {
  if (a.prefix.size() != b.prefix.size()) return false;
  for (size_t i = 0; i < a.prefix.size(); ++i)
    if (a.prefix[i].first != b.prefix[i].first ||
        !type_eq(a.prefix[i].second, b.prefix[i].second))
      return false;
  return true;
}

// clauses of one sentence, closed under symmetry and transitivity of
// the equations among them
void add_equation_closure(std::vector<Clause>& clauses) {
  size_t n = clauses.size();
  std::vector<Clause> eqs;
  for (size_t i = 0; i < n; ++i)
    if (clauses[i].body->tag == Expr::Tag::Eq) eqs.push_back(clauses[i]);
  // symmetry
  for (const Clause& c : eqs)
    clauses.push_back({c.prefix, eq(c.body->b, c.body->a)});
  // one round of transitivity over the symmetric closure
  size_t m = clauses.size();
  for (size_t i = n; i-- > 0;) {
    if (clauses[i].body->tag != Expr::Tag::Eq) continue;
    for (size_t j = 0; j < m; ++j) {
      if (i == j || clauses[j].body->tag != Expr::Tag::Eq) continue;
      if (!same_prefix(clauses[i], clauses[j])) continue;
      if (alpha_eq(clauses[i].body->b, clauses[j].body->a) &&
          !alpha_eq(clauses[i].body->a, clauses[j].body->b))
        clauses.push_back(
            {clauses[i].prefix, eq(clauses[i].body->a, clauses[j].body->b)});
    }
  }
}

std::vector<ExprPtr> known_closure(const std::vector<ExprPtr>& sentences) {
  std::vector<ExprPtr> out = sentences;
  for (const ExprPtr& s : sentences) {
    std::vector<Clause> clauses = split_sentence(s);
    add_equation_closure(clauses);
    for (const Clause& c : clauses) out.push_back(rewrap(c));
  }
  return out;
}

bool syntactically_valid(const ExprPtr& e, const std::vector<ExprPtr>& known) {
  for (const ExprPtr& k : known)
    if (alpha_eq(e, k)) return true;
  if (alpha_eq(e, pc::truth())) return true;
  ExprPtr a, b;
  if (pc::match_and(e, a, b))
    return syntactically_valid(a, known) && syntactically_valid(b, known);
  // A = A holds when A denotes; abstractions, variables, equations and
  // pairs of such always do
  if (e->tag == Expr::Tag::Eq && alpha_eq(e->a, e->b) &&
      obviously_defined(e->a))
    return true;
  // membership in a universal set
  if (e->tag == Expr::Tag::App && e->a->tag == Expr::Tag::Abs &&
      alpha_eq(e->a->a, pc::truth()) && obviously_defined(e->b))
    return true;
  return false;
}

bool clause_valid(const ExprPtr& sentence, const std::vector<ExprPtr>& known) {
  if (syntactically_valid(sentence, known)) return true;
  std::vector<Clause> clauses = split_sentence(sentence);
  if (clauses.size() == 1 && clauses[0].prefix.empty()) return false;
  for (const Clause& c : clauses)
    if (!syntactically_valid(rewrap(c), known)) return false;
  return true;
}

}  // namespace

SizeSpec parse_sizes(const std::string& spec) {
  SizeSpec s;
  std::string cur;
  std::istringstream in(spec);
  while (std::getline(in, cur, ',')) {
    size_t eqp = cur.find('=');
    if (eqp == std::string::npos)
      throw ParseError("bad size entry '" + cur + "' (want base=N)");
    std::string base, num;
    for (char ch : cur.substr(0, eqp))
      if (!std::isspace(static_cast<unsigned char>(ch))) base += ch;
    for (char ch : cur.substr(eqp + 1))
      if (!std::isspace(static_cast<unsigned char>(ch))) num += ch;
    if (base.empty() || num.empty())
      throw ParseError("bad size entry '" + cur + "'");
    s.base_sizes[base] = std::stoull(num);
  }
  return s;
}

MorphismReport certify_morphism(const ModuleStore& store, const Translation& t,
                                bool parallel) {
  MorphismReport rep;
  rep.translation = t.name;
  rep.obligations = obligations(store, t);
  Theory ctx = store.discharge_context(t);

  std::vector<ExprPtr> known;
  for (const auto& [lbl, ax] : ctx.axioms) known.push_back(ax);
  for (const auto& [lbl, thm] : store.discharge_theorems(t))
    known.push_back(thm);
  known = known_closure(known);

  bool ok = true;
  for (Obligation& ob : rep.obligations) {
    std::string trust_key = ob.about;
    if (ob.kind == Obligation::Kind::BaseNonEmpty)
      trust_key = "base " + ob.about;
    else if (ob.kind == Obligation::Kind::ConstDefined)
      trust_key = "const " + ob.about;
    auto tr = t.trusted.find(trust_key);
    if (tr != t.trusted.end()) {
      ob.status.kind = ProofStatus::Kind::Trusted;
      ob.status.reference = tr->second;
      continue;
    }
    if (clause_valid(ob.sentence, known)) {
      ob.status.kind = ProofStatus::Kind::CheckedSyntactic;
      continue;
    }
    if (!t.check_sizes.empty()) {
      SizeSpec sizes = parse_sizes(t.check_sizes);
      CheckResult res = check_validity_at_scale(ctx, ob.sentence, sizes,
                                                parallel);
      if (res.refuted) {
        ob.status.kind = ProofStatus::Kind::Refuted;
        ob.status.reference = "countermodel at " + t.check_sizes;
        ok = false;
      } else {
        ob.status.kind = ProofStatus::Kind::CheckedFinite;
        ob.status.sizes = t.check_sizes;
        ob.status.models_checked = res.models_checked;
      }
      continue;
    }
    ob.status.kind = ProofStatus::Kind::Unchecked;
    ok = false;
  }
  rep.certified = ok;
  return rep;
}

Development transport_apply(const ModuleStore& store, const Transport& t) {
  const Development& from = store.dev(t.from_dev);
  Translation tr = store.translation(t.via);
  Development out = store.dev(t.to_dev);
  out.name = t.yields;
  std::string origin =
      "morphism " + (t.morphism.empty() ? t.via : t.morphism);
  for (const TransportItem& item : t.items) {
    const Package* pkg = from.package(item.src_label);
    if (!pkg)
      throw ParseError("transport " + t.name + ": no package " +
                       item.src_label + " in " + t.from_dev);
    Theory top = out.top_theory();
    Package np;
    np.label = item.new_label;
    np.caption = pkg->caption;
    np.proof.kind = ProofStatus::Kind::Trusted;
    np.proof.reference = origin;
    if (pkg->kind == Package::Kind::Def) {
      if (item.new_const.empty())
        throw ParseError("transport " + t.name + ": definition " +
                         item.src_label + " needs a target constant name");
      if (top.language.constant_type(item.new_const))
        throw ClashError("transport " + t.name + ": constant '" +
                         item.new_const + "' already exists in " + t.to_dev);
      np.kind = Package::Kind::Def;
      np.const_name = item.new_const;
      np.const_ty = translate_type(tr, pkg->const_ty);
      np.body = translate_expr(tr, top.language, pkg->body);
      if (!type_eq(infer_type(np.body), np.const_ty))
        throw TypeError("transport " + t.name + ": translated definiens of " +
                        item.src_label + " has the wrong type");
      // later items may mention this definition through the source name
      tr.const_map.emplace_back(pkg->const_name,
                                cnst(item.new_const, np.const_ty));
    } else {
      np.kind = Package::Kind::Thm;
      np.body = translate_expr(tr, top.language, pkg->body);
    }
    out.packages.push_back(std::move(np));
  }
  return out;
}

std::vector<std::pair<std::string, bool>> check_expects(
    const ModuleStore& store, const Transport& t) {
  const Development& d = store.dev(t.yields);
  Language L = d.top_theory().language;
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [label, tree] : t.expects) {
    const Package* pkg = d.package(label);
    if (!pkg) {
      out.emplace_back(label, false);
      continue;
    }
    ElabContext ctx;
    ctx.language = &L;
    ExprPtr want = elaborate(tree, ctx);
    out.emplace_back(label, alpha_eq(want, pkg->body));
  }
  return out;
}

std::vector<std::string> check_development(Development& d, bool parallel) {
  std::vector<std::string> refuted;
  for (size_t i = 0; i < d.packages.size(); ++i) {
    Package& pkg = d.packages[i];
    if (pkg.kind != Package::Kind::Thm) continue;
    if (pkg.proof.kind != ProofStatus::Kind::Unchecked ||
        pkg.proof.sizes.empty())
      continue;
    Theory visible = d.theory_before(i);
    SizeSpec sizes = parse_sizes(pkg.proof.sizes);
    CheckResult res;
    try {
      res = check_validity_at_scale(visible, pkg.body, sizes, parallel);
    } catch (const BudgetExceeded& e) {
      // a theorem included from a smaller theory may not fix sizes for
      // every base type visible here; leave it unchecked rather than
      // aborting the whole development
      pkg.proof.reference = e.what();
      continue;
    }
    if (res.refuted) {
      pkg.proof.kind = ProofStatus::Kind::Refuted;
      pkg.proof.reference = "countermodel at " + pkg.proof.sizes;
      refuted.push_back(pkg.label);
    } else {
      pkg.proof.kind = ProofStatus::Kind::CheckedFinite;
      pkg.proof.models_checked = res.models_checked;
    }
  }
  return refuted;
}

DevGraph build_graph(const ModuleStore& store,
                     const std::vector<std::string>& node_names,
                     const std::vector<std::string>& implicit_inclusions) {
  DevGraph g;
  std::map<std::string, std::string> theory_node;  // bottom theory -> node
  for (const std::string& n : node_names) {
    DevGraph::Node node;
    node.name = n;
    if (store.devs.count(n)) {
      node.is_dev = true;
      node.theory = store.devs.at(n).bottom.name;
    } else {
      store.theory(n);  // must exist
      node.theory = n;
    }
    if (theory_node.count(node.theory))
      throw ParseError("two graph nodes over theory " + node.theory);
    theory_node[node.theory] = n;
    g.nodes.push_back(std::move(node));
  }
  auto node_of = [&](const std::string& th) -> const std::string* {
    auto it = theory_node.find(th);
    return it == theory_node.end() ? nullptr : &it->second;
  };
  // inclusions from direct theory extension
  for (const DevGraph::Node& n : g.nodes) {
    auto it = store.extends.find(n.theory);
    if (it == store.extends.end()) continue;
    for (const std::string& parent : it->second)
      if (const std::string* pn = node_of(parent))
        g.edges.push_back({*pn, n.name, "", true});
  }
  // declared implicit inclusions, "Parent>Child" over theory names
  for (const std::string& spec : implicit_inclusions) {
    size_t gt = spec.find('>');
    if (gt == std::string::npos)
      throw ParseError("bad implicit inclusion '" + spec + "'");
    const std::string* a = node_of(spec.substr(0, gt));
    const std::string* b = node_of(spec.substr(gt + 1));
    if (!a || !b)
      throw ParseError("implicit inclusion '" + spec +
                       "' names a theory without a node");
    g.edges.push_back({*a, *b, "", true});
  }
  // translations between node theories
  for (const std::string& tn : store.translation_order) {
    const Translation& t = store.translations.at(tn);
    const std::string* a = node_of(t.src);
    const std::string* b = node_of(t.tgt);
    if (a && b) g.edges.push_back({*a, *b, t.name, false});
  }
  return g;
}

std::string to_dot(const DevGraph& g) {
  std::ostringstream out;
  out << "digraph development_graph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (const DevGraph::Node& n : g.nodes) out << "  \"" << n.name << "\";\n";
  for (const DevGraph::Edge& e : g.edges) {
    out << "  \"" << e.src << "\" -> \"" << e.tgt << "\"";
    if (e.inclusion)
      out << " [style=dashed]";
    else
      out << " [label=\"" << e.label << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace alonzo
