#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alonzo/builders.hpp"
#include "alonzo/semantics.hpp"

using namespace alonzo;

namespace {

TypePtr M() { return base_ty("M"); }
TypePtr op_ty() { return fun_ty(prod_ty(M(), M()), M()); }
ExprPtr op() { return cnst("*", op_ty()); }
ExprPtr e_() { return cnst("e", M()); }
ExprPtr mul(const ExprPtr& a, const ExprPtr& b) {
  return pc::infix(op(), a, b);
}

// the theory of monoids: one base type, a paired operation, an identity
Theory make_mon() {
  Theory t;
  t.name = "MON";
  t.language.base_types.insert("M");
  t.language.add_constant("*", op_ty());
  t.language.add_constant("e", M());
  ExprPtr x = var("x", M()), y = var("y", M()), z = var("z", M());
  ExprPtr assoc = pc::forall(
      "x", M(),
      pc::forall("y", M(),
                 pc::forall("z", M(), eq(mul(x, mul(y, z)),
                                         mul(mul(x, y), z)))));
  ExprPtr ident = pc::forall(
      "x", M(), pc::eq_chain({mul(e_(), x), mul(x, e_()), x}));
  t.axioms.emplace_back("Ax1", assoc);
  t.axioms.emplace_back("Ax2", ident);
  return t;
}

SizeSpec sizes(std::uint64_t m) {
  SizeSpec s;
  s.base_sizes["M"] = m;
  return s;
}

// |M| = 2 with * = addition mod 2 and e = 0
Model xor_model() {
  Model m;
  m.sizes = sizes(2);
  // table over pairs (0,0)(0,1)(1,0)(1,1) -> 0,1,1,0; digit base 3
  Val star = 0 * 27 + 1 * 9 + 1 * 3 + 0;
  m.consts = {{"*", star}, {"e", 0}};
  return m;
}

}  // namespace

TEST_CASE("domain cardinalities at |M| = 2") {
  SizeSpec s = sizes(2);
  CHECK(domain_card(bool_ty(), s) == 2);
  CHECK(domain_card(M(), s) == 2);
  CHECK(domain_card(prod_ty(M(), M()), s) == 4);
  // partial + total functions
  CHECK(domain_card(fun_ty(M(), M()), s) == 9);
  // predicates are total
  CHECK(domain_card(set_ty(M()), s) == 4);
  CHECK(domain_card(op_ty(), s) == 81);
}

TEST_CASE("cardinality overflow and iteration budget") {
  SizeSpec s = sizes(3);
  TypePtr mm = fun_ty(M(), M());      // 4^3 = 64 elements
  TypePtr big = fun_ty(mm, mm);       // 65^64: overflows 64 bits
  CHECK(!domain_card(big, s).has_value());
  CHECK_THROWS_AS(iter_card(big, s), BudgetExceeded);
  s.domain_budget = 10;
  CHECK_THROWS_AS(iter_card(mm, s), BudgetExceeded);
}

TEST_CASE("valuation of the logical constants") {
  Model m = xor_model();
  Evaluator ev(m);
  CHECK(ev.eval(pc::truth()) == 1);
  CHECK(ev.eval(pc::falsity()) == 0);
  CHECK(ev.eval(pc::and_(pc::truth(), pc::falsity())) == 0);
  CHECK(ev.eval(pc::or_(pc::truth(), pc::falsity())) == 1);
  CHECK(ev.eval(pc::not_(pc::falsity())) == 1);
  CHECK(ev.eval(pc::implies(pc::falsity(), pc::falsity())) == 1);
}

TEST_CASE("equality on undefined operands is false") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr u = pc::bot(M());
  CHECK(!ev.eval(u).has_value());
  CHECK(ev.eval(eq(u, u)) == 0);          // V3: both undefined -> F
  CHECK(ev.eval(eq(e_(), u)) == 0);
  CHECK(ev.eval(eq(e_(), e_())) == 1);
}

TEST_CASE("application propagates undefinedness except at o") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr u = pc::bot(M());
  CHECK(!ev.eval(app(pc::id_fun(M()), u)).has_value());
  // predicate applied to an undefined argument falls back to F
  CHECK(ev.eval(app(pc::univ_set(M()), u)) == 0);
  // an undefined function applied at type o also falls back to F
  ExprPtr ufun = pc::bot(set_ty(M()));
  CHECK(ev.eval(app(ufun, e_())) == 0);
}

TEST_CASE("abstraction denotes the pointwise function") {
  Model m = xor_model();
  Evaluator ev(m);
  // identity on M: digits (0,1) in base 3 -> index 1
  CHECK(ev.eval(pc::id_fun(M())) == 1);
  // the empty function: both entries undefined -> digits (2,2) -> 8
  CHECK(ev.eval(pc::emp_fun(M(), M())) == 8);
}

TEST_CASE("definite description needs a unique witness") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr x = var("x", M());
  CHECK(ev.eval(iota("x", M(), eq(x, e_()))) == 0);
  CHECK(ev.eval(iota("x", M(), pc::neq(x, e_()))) == 1);
  // two witnesses
  CHECK(!ev.eval(iota("x", M(), eq(x, x))).has_value());
  // no witness
  CHECK(!ev.eval(iota("x", M(), pc::neq(x, x))).has_value());
}

TEST_CASE("ordered pairs are strict") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr u = pc::bot(M());
  CHECK(!ev.eval(pair(e_(), u)).has_value());
  CHECK(!ev.eval(pair(u, e_())).has_value());
  CHECK(ev.eval(pair(e_(), e_())) == 0);
  ExprPtr one = iota("x", M(), pc::neq(var("x", M()), e_()));
  CHECK(ev.eval(pair(e_(), one)) == 1);  // fst-major indexing
}

TEST_CASE("quasi-equality truth table") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr u = pc::bot(M());
  ExprPtr one = iota("x", M(), pc::neq(var("x", M()), e_()));
  CHECK(ev.eval(pc::quasi_eq(u, u)) == 1);      // both undefined
  CHECK(ev.eval(pc::quasi_eq(e_(), u)) == 0);   // one side defined
  CHECK(ev.eval(pc::quasi_eq(u, e_())) == 0);
  CHECK(ev.eval(pc::quasi_eq(e_(), e_())) == 1);
  CHECK(ev.eval(pc::quasi_eq(e_(), one)) == 0);  // defined and different
}

TEST_CASE("validity quantifies over assignments") {
  Model m = xor_model();
  Evaluator ev(m);
  ExprPtr x = var("x", M()), y = var("y", M());
  CHECK(ev.is_valid(eq(x, x)));
  CHECK(!ev.is_valid(eq(x, y)));
  CHECK(!ev.is_valid(eq(x, e_())));
  // xor is its own inverse
  CHECK(ev.is_valid(eq(mul(x, x), e_())));
}

TEST_CASE("model enumeration for the monoid theory") {
  Theory mon = make_mon();
  auto m1 = enumerate_models(mon, sizes(1), false);
  CHECK(m1.size() == 1);
  // on two elements: identity is either element, and with a != e the
  // product a*a may be e or a; all four pass associativity
  auto m2 = enumerate_models(mon, sizes(2), false);
  CHECK(m2.size() == 4);
  auto m2p = enumerate_models(mon, sizes(2), true);
  REQUIRE(m2p.size() == m2.size());
  for (size_t i = 0; i < m2.size(); ++i) {
    CHECK(m2[i].consts == m2p[i].consts);
    Evaluator ev(m2[i]);
    for (const auto& [label, ax] : mon.axioms) CHECK(ev.is_valid(ax));
  }
}

TEST_CASE("axioms shaped as definitions are computed, not enumerated") {
  Theory t = make_mon();
  t.language.add_constant("*op", op_ty());
  ExprPtr p = var("p", prod_ty(M(), M()));
  ExprPtr body =
      abs("p", prod_ty(M(), M()), mul(pc::snd(p), pc::fst(p)));
  t.axioms.emplace_back("Def2", eq(cnst("*op", op_ty()), body));
  // conservative extension: same models as MON at |M| = 2
  auto ms = enumerate_models(t, sizes(2), false);
  CHECK(ms.size() == 4);
  // and *op really is the flipped table in every model
  ExprPtr x = var("x", M()), y = var("y", M());
  ExprPtr flip = pc::forall(
      "x", M(),
      pc::forall("y", M(), eq(pc::infix(cnst("*op", op_ty()), x, y),
                              mul(y, x))));
  for (const auto& m : ms) {
    Evaluator ev(m);
    CHECK(ev.is_valid(flip));
  }
}

TEST_CASE("commutativity is refuted at |M| = 3 with a countermodel") {
  Theory mon = make_mon();
  ExprPtr x = var("x", M()), y = var("y", M());
  ExprPtr comm = pc::forall(
      "x", M(), pc::forall("y", M(), eq(mul(x, y), mul(y, x))));
  // every 2-element monoid is commutative
  auto r2 = check_validity_at_scale(mon, comm, sizes(2), false);
  CHECK(!r2.refuted);
  CHECK(r2.models_checked == 4);
  // at three elements there are noncommutative monoids
  auto r3s = check_validity_at_scale(mon, comm, sizes(3), false);
  auto r3p = check_validity_at_scale(mon, comm, sizes(3), true);
  REQUIRE(r3s.refuted);
  REQUIRE(r3p.refuted);
  REQUIRE(r3s.countermodel.has_value());
  // deterministic: parallel search returns the same (first) countermodel
  CHECK(r3s.countermodel->consts == r3p.countermodel->consts);
  Evaluator ev(*r3s.countermodel);
  CHECK(!ev.is_valid(comm));
  for (const auto& [label, ax] : mon.axioms) CHECK(ev.is_valid(ax));
  // serialization smoke test
  auto j = model_to_json(*r3s.countermodel, mon.language);
  CHECK(j.contains("sizes"));
  CHECK(j.contains("constants"));
}

TEST_CASE("universal set facts hold at small sizes") {
  Theory t;
  t.name = "one-constant";
  t.language.base_types.insert("A");
  t.language.add_constant("c", base_ty("A"));
  TypePtr A = base_ty("A");
  ExprPtr u = pc::univ_set(A);
  ExprPtr c = cnst("c", A);
  ExprPtr x = var("x", A);
  ExprPtr some_b = eq(x, c);
  std::vector<ExprPtr> facts = {
      pc::is_defined(u),
      pc::neq(u, pc::emp_set(A)),
      pc::forall("x", A, pc::member(x, u)),
      pc::iff(pc::forall("x", A, some_b), pc::qt_forall("x", u, some_b)),
      pc::iff(pc::is_defined(c), pc::is_defined_in(c, u)),
  };
  for (std::uint64_t n = 1; n <= 3; ++n) {
    SizeSpec s;
    s.base_sizes["A"] = n;
    for (const auto& fact : facts) {
      auto r = check_validity_at_scale(t, fact, s, false);
      CHECK(!r.refuted);
      CHECK(r.models_checked == n);  // one model per choice of c
    }
  }
}

TEST_CASE("value decoding to json") {
  SizeSpec s = sizes(2);
  auto j = value_to_json(1, bool_ty(), s);
  CHECK(j == true);
  auto jf = value_to_json(0 * 27 + 1 * 9 + 1 * 3 + 0, op_ty(), s);
  REQUIRE(jf.is_array());
  CHECK(jf.size() == 4);
  CHECK(jf[1] == 1);
  auto je = value_to_json(8, fun_ty(M(), M()), s);  // empty function
  CHECK(je[0].is_null());
  CHECK(je[1].is_null());
}
