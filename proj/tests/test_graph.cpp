#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alonzo/graph.hpp"

using namespace alonzo;

namespace {

const char* kMiniCorpus = R"(
-- a small monoid world for exercising the module calculus

theory MON {
  base a;
  const * : a * a -> a;
  const e : a;
  axiom Ax1 "associativity" : forall x,y,z:a. x * (y * z) = (x * y) * z;
  axiom Ax2 "two-sided identity" : forall x:a. e * x = x * e = x;
}

theory MON-ACT extends MON {
  base s;
  const @ : a * s -> s;
  axiom Ax3 : forall x,y:a. forall t:s. x @ (y @ t) = (x * y) @ t;
  axiom Ax4 : forall t:s. e @ t = t;
}

development MON-0 of MON {
}

development MON-1 of MON {
  def Def1 dbl : a -> a := \x:a. x * x;
  thm Thm1 by trusted "mini:Thm1" : forall x:a. dbl x = x * x;
}

-- a monoid acts on itself by its own operation
translation act-collapse : MON-ACT -> MON {
  base a => a;
  base s => a;
  const @ => *;
}

-- the opposite monoid
translation op : MON -> MON {
  base a => a;
  const * => \p:a * a. Snd(p) * Fst(p);
  sizes "a=2";
}

transport op-transport {
  from MON-1;
  via op;
  to MON-0;
  yields MON-0op;
  morphism MON-1-to-MON-0;
  item Def1 as Def1op const dblop;
  item Thm1 as Thm1op;
  expect Def1op : \x:a. (\p:a * a. Snd(p) * Fst(p)) (x, x);
  expect Thm1op : forall x:a. dblop x = (\p:a * a. Snd(p) * Fst(p)) (x, x);
}

theory MON-EXT extends MON {
  base b;
}

development D2 of MON-EXT {
  include MON-1;
  thm Thm2 by checked "a=2,b=2" : forall x:a. dbl (dbl x) = (x * x) * (x * x);
}
)";

ModuleStore mini() {
  ModuleStore store;
  load_module_text(store, kMiniCorpus);
  return store;
}

}  // namespace

TEST_CASE("module files define theories, developments, translations") {
  ModuleStore s = mini();
  const Theory& mon = s.theory("MON");
  CHECK(mon.language.base_types.count("a") == 1);
  CHECK(mon.language.constants.size() == 2);
  CHECK(mon.axioms.size() == 2);

  const Theory& act = s.theory("MON-ACT");
  CHECK(act.language.base_types.size() == 2);
  CHECK(act.language.constants.size() == 3);  // *, e, @
  CHECK(act.axioms.size() == 4);              // inherited + own
  REQUIRE(s.extends.count("MON-ACT") == 1);
  CHECK(s.extends.at("MON-ACT") == std::vector<std::string>{"MON"});

  const Development& d1 = s.dev("MON-1");
  CHECK(d1.count_defs() == 1);
  CHECK(d1.count_thms() == 1);
  Theory top = d1.top_theory();
  CHECK(top.language.constant_type("dbl") != nullptr);
  CHECK(top.axioms.size() == 3);  // Ax1, Ax2, defining axiom of dbl

  const Translation& t = s.translation("act-collapse");
  CHECK(t.src == "MON-ACT");
  CHECK(t.tgt == "MON");
  CHECK(t.base_map.size() == 2);
  CHECK(t.const_map.size() == 1);
}

TEST_CASE("module parse errors carry position information") {
  ModuleStore s;
  CHECK_THROWS_AS(load_module_text(s, "theory T { bad; }"), ParseError);
  CHECK_THROWS_AS(
      load_module_text(s, "theory T { base a; axiom A1 : e; }"), ParseError);
  // an axiom must be a sentence
  CHECK_THROWS_AS(
      load_module_text(
          s, "theory T2 { base a; const c : a; axiom A1 : c; }"),
      ParseError);
  // a translation must map every base type
  load_module_text(s, "theory T3 { base a; base b; }");
  CHECK_THROWS_AS(
      load_module_text(s, "translation bad : T3 -> T3 { base a => a; }"),
      ParseError);
}

TEST_CASE("translation of types and expressions") {
  ModuleStore s = mini();
  const Translation& t = s.translation("act-collapse");
  TypePtr a = base_ty("a"), sb = base_ty("s");
  CHECK(type_eq(translate_type(t, fun_ty(prod_ty(a, sb), sb)),
                fun_ty(prod_ty(a, a), a)));
  // constants: explicit image and same-name fallback
  const Language& mon = s.theory("MON").language;
  TypePtr actty = fun_ty(prod_ty(a, sb), sb);
  ExprPtr img = translate_expr(t, mon, cnst("@", actty));
  CHECK(img->tag == Expr::Tag::Const);
  CHECK(img->name == "*");
  ExprPtr ee = translate_expr(t, mon, cnst("e", a));
  CHECK(ee->name == "e");
  // a universal over a base mapped to a plain type stays plain
  ExprPtr ax4 = *s.theory("MON-ACT").axiom("Ax4");
  ExprPtr tx = translate_expr(t, mon, ax4);
  std::string x;
  TypePtr ty;
  ExprPtr body;
  REQUIRE(pc::match_forall(tx, x, ty, body));
  CHECK(type_eq(ty, a));
}

TEST_CASE("relativized translation targets a quasitype") {
  ModuleStore s = mini();
  // map the action's stage to the singleton {e} of the target
  Translation t;
  t.name = "to-singleton";
  t.src = "MON-ACT";
  t.tgt = "MON";
  TypePtr a = base_ty("a");
  ExprPtr e = cnst("e", a);
  t.base_map.emplace_back("a", Carrier{a, nullptr});
  t.base_map.emplace_back("s", Carrier{a, pc::fin_set({e})});
  t.const_map.emplace_back("@", cnst("*", fun_ty(prod_ty(a, a), a)));
  const Language& mon = s.theory("MON").language;
  ExprPtr ax4 = *s.theory("MON-ACT").axiom("Ax4");
  ExprPtr tx = translate_expr(t, mon, ax4);
  // forall t:{e}. e * t = t
  ExprPtr want = pc::qt_forall(
      "t", pc::fin_set({e}),
      eq(app(cnst("*", fun_ty(prod_ty(a, a), a)), pair(e, var("t", a))),
         var("t", a)));
  CHECK(alpha_eq(tx, want));

  // obligations: one per quasitype base, one per mapped constant, one
  // per axiom, in that order
  std::vector<Obligation> obs = obligations(s, t);
  REQUIRE(obs.size() == 1 + 1 + 4);
  CHECK(obs[0].kind == Obligation::Kind::BaseNonEmpty);
  CHECK(obs[0].about == "s");
  CHECK(obs[1].kind == Obligation::Kind::ConstDefined);
  CHECK(obs[1].about == "@");
  CHECK(obs[2].kind == Obligation::Kind::Axiom);
  CHECK(obs[2].about == "Ax1");
}

TEST_CASE("morphism certification uses syntactic fast paths") {
  ModuleStore s = mini();
  MorphismReport rep = certify_morphism(s, s.translation("act-collapse"));
  CHECK(rep.certified);
  REQUIRE(rep.obligations.size() == 5);  // @ defined, Ax1..Ax4
  for (const Obligation& ob : rep.obligations)
    CHECK(ob.status.kind == ProofStatus::Kind::CheckedSyntactic);
  // Ax3 matches Ax1 up to bound-variable names; Ax4 matches the
  // transitivity consequence of the chained identity axiom
}

TEST_CASE("morphism certification falls back to finite model search") {
  ModuleStore s = mini();
  MorphismReport rep = certify_morphism(s, s.translation("op"));
  CHECK(rep.certified);
  REQUIRE(rep.obligations.size() == 3);  // * defined, Ax1, Ax2
  CHECK(rep.obligations[0].status.kind ==
        ProofStatus::Kind::CheckedSyntactic);  // image is an abstraction
  CHECK(rep.obligations[1].status.kind == ProofStatus::Kind::CheckedFinite);
  CHECK(rep.obligations[1].status.models_checked > 0);
}

TEST_CASE("a bad translation is refuted by a countermodel") {
  ModuleStore s = mini();
  load_module_text(s, R"(
    translation first-proj : MON -> MON {
      base a => a;
      const * => \p:a * a. Fst(p);
      sizes "a=2";
    }
  )");
  MorphismReport rep = certify_morphism(s, s.translation("first-proj"));
  CHECK(!rep.certified);
  bool saw_refuted = false;
  for (const Obligation& ob : rep.obligations)
    if (ob.status.kind == ProofStatus::Kind::Refuted) saw_refuted = true;
  CHECK(saw_refuted);
}

TEST_CASE("trusted obligations are cited, unchecked ones fail") {
  ModuleStore s = mini();
  load_module_text(s, R"(
    translation op2 : MON -> MON {
      base a => a;
      const * => \p:a * a. Snd(p) * Fst(p);
      trust Ax1 "mini:op-assoc";
    }
  )");
  MorphismReport rep = certify_morphism(s, s.translation("op2"));
  CHECK(!rep.certified);  // Ax2 has no discharge
  CHECK(rep.obligations[1].status.kind == ProofStatus::Kind::Trusted);
  CHECK(rep.obligations[1].status.reference == "mini:op-assoc");
  CHECK(rep.obligations[2].status.kind == ProofStatus::Kind::Unchecked);
}

TEST_CASE("transport carries definitions and theorems along a morphism") {
  ModuleStore s = mini();
  const Development& d = s.dev("MON-0op");
  REQUIRE(d.packages.size() == 2);
  CHECK(d.packages[0].kind == Package::Kind::Def);
  CHECK(d.packages[0].const_name == "dblop");
  CHECK(d.packages[1].kind == Package::Kind::Thm);
  CHECK(d.packages[1].proof.kind == ProofStatus::Kind::Trusted);
  CHECK(d.packages[1].proof.reference == "morphism MON-1-to-MON-0");
  // the transported theorem mentions the transported constant
  Theory top = d.top_theory();
  CHECK(top.language.constant_type("dblop") != nullptr);

  REQUIRE(s.transports.size() == 1);
  auto expects = check_expects(s, s.transports[0]);
  REQUIRE(expects.size() == 2);
  CHECK(expects[0].second);
  CHECK(expects[1].second);
}

TEST_CASE("transport rejects clashing constant names") {
  ModuleStore s = mini();
  CHECK_THROWS_AS(load_module_text(s, R"(
    transport clash {
      from MON-1;
      via op;
      to MON-1;
      yields MON-1op;
      item Def1 as Def1op const dbl;
    }
  )"),
                  ClashError);
}

TEST_CASE("the inclusion convention imports packages over a subtheory") {
  ModuleStore s = mini();
  const Development& d2 = s.dev("D2");
  REQUIRE(d2.packages.size() == 3);
  CHECK(d2.packages[0].label == "Def1");
  CHECK(d2.bottom.name == "MON-EXT");
  Theory top = d2.top_theory();
  CHECK(top.language.constant_type("dbl") != nullptr);
  CHECK(top.language.has_base("b"));
}

TEST_CASE("finite checking of annotated theorems") {
  ModuleStore s = mini();
  Development d2 = s.dev("D2");
  std::vector<std::string> refuted = check_development(d2);
  CHECK(refuted.empty());
  const Package* t2 = d2.package("Thm2");
  REQUIRE(t2 != nullptr);
  CHECK(t2->proof.kind == ProofStatus::Kind::CheckedFinite);
  CHECK(t2->proof.models_checked > 0);

  // a false claim is refuted
  load_module_text(s, R"(
    development D3 of MON {
      thm Bad by checked "a=3" : forall x,y:a. x * y = y * x;
    }
  )");
  Development d3 = s.dev("D3");
  refuted = check_development(d3);
  REQUIRE(refuted.size() == 1);
  CHECK(refuted[0] == "Bad");
  CHECK(d3.package("Bad")->proof.kind == ProofStatus::Kind::Refuted);
}

TEST_CASE("development graph and DOT export") {
  ModuleStore s = mini();
  DevGraph g = build_graph(s, {"MON-1", "MON-ACT", "MON-EXT"}, {});
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.nodes[0].theory == "MON");
  // inclusions from extension, translations as labeled edges
  int inclusions = 0, morphs = 0;
  for (const auto& e : g.edges) (e.inclusion ? inclusions : morphs)++;
  CHECK(inclusions == 2);  // MON-1 -> MON-ACT, MON-1 -> MON-EXT
  CHECK(morphs == 2);      // act-collapse, op (self-loop)
  std::string dot = to_dot(g);
  CHECK(dot.find("\"MON-1\" -> \"MON-ACT\" [style=dashed]") !=
        std::string::npos);
  CHECK(dot.find("[label=\"act-collapse\"]") != std::string::npos);

  // declared implicit inclusions add styled edges
  DevGraph g2 = build_graph(s, {"MON-1", "MON-ACT"}, {"MON>MON-ACT"});
  int incl2 = 0;
  for (const auto& e : g2.edges) incl2 += e.inclusion;
  CHECK(incl2 == 2);
  CHECK_THROWS_AS(build_graph(s, {"MON-1", "MON-0"}, {}), ParseError);
}
