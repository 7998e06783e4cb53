#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "alonzo/graph.hpp"

using namespace alonzo;

namespace {

const std::string kDir = ALONZO_CORPUS_DIR;

ModuleStore& corpus() {
  static ModuleStore store = load_corpus(kDir);
  return store;
}

// obligation counts by kind: {base nonemptiness, constant definedness,
// axiom translations}
std::array<size_t, 3> kind_counts(const std::vector<Obligation>& obs) {
  std::array<size_t, 3> out{0, 0, 0};
  for (const Obligation& ob : obs) out[static_cast<size_t>(ob.kind)]++;
  return out;
}

const Obligation& find_ob(const std::vector<Obligation>& obs,
                          Obligation::Kind k, const std::string& about) {
  for (const Obligation& ob : obs)
    if (ob.kind == k && ob.about == about) return ob;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

size_t count_status(const MorphismReport& rep, ProofStatus::Kind k) {
  size_t n = 0;
  for (const Obligation& ob : rep.obligations)
    if (ob.status.kind == k) n++;
  return n;
}

}  // namespace

TEST_CASE("corpus loads with the expected package counts") {
  ModuleStore& s = corpus();

  const Development& mon1 = s.dev("MON-1");
  CHECK(mon1.count_defs() == 4);
  CHECK(mon1.count_thms() == 10);

  CHECK(s.theory("MON").axioms.size() == 2);
  CHECK(s.theory("MON-HOM").axioms.size() == 6);
  CHECK(s.theory("COF").language.constants.size() == 10);
  CHECK(s.theory("COF").axioms.size() == 18);
  CHECK(s.theory("MON-over-COF").axioms.size() == 20);

  const Development& str1 = s.dev("STR-1");
  const Development& str2 = s.dev("STR-2");
  CHECK(str2.count_defs() == str1.count_defs() + 3);
  CHECK(str2.count_thms() == str1.count_thms() + 2);

  // the accumulated monoid development: four transports deep
  const Development& mon5 = s.dev("MON-5");
  CHECK(mon5.count_defs() == 4);
  CHECK(mon5.count_thms() == 14);
  for (const char* lbl : {"Thm11", "Thm12", "Thm24", "Thm28"}) {
    const Package* pkg = mon5.package(lbl);
    REQUIRE(pkg != nullptr);
    CHECK(pkg->proof.kind == ProofStatus::Kind::Trusted);
  }
  CHECK(mon5.package("Thm24")->proof.reference ==
        "morphism MON-ACT-1-to-MON-4");

  const Development& str3 = s.dev("STR-3");
  CHECK(str3.count_defs() == str2.count_defs() + 3);
  CHECK(str3.count_thms() == str2.count_thms() + 2);
  CHECK(str3.package("Def15")->const_name == "iter-cat");
}

TEST_CASE("obligation counts for the whole-type and quasitype fixtures") {
  ModuleStore& s = corpus();
  CHECK(kind_counts(obligations(s, s.translation("special-MON-to-T"))) ==
        std::array<size_t, 3>{0, 2, 2});
  CHECK(kind_counts(obligations(s, s.translation("general-MON-to-T"))) ==
        std::array<size_t, 3>{1, 2, 2});
  CHECK(kind_counts(obligations(s, s.translation("MON-over-COF-to-STR-2"))) ==
        std::array<size_t, 3>{1, 12, 20});
}

TEST_CASE("quasitype-image obligations relativize to the carrier") {
  ModuleStore& s = corpus();
  const Language& L = s.theory("GEN-T").language;
  auto obs = obligations(s, s.translation("general-MON-to-T"));
  auto want = [&](Obligation::Kind k, const std::string& about,
                  const std::string& text) {
    CHECK(alpha_eq(find_ob(obs, k, about).sentence, elaborate_term(text, L)));
  };
  want(Obligation::Kind::BaseNonEmpty, "M", "~ (Q = EmpSet@[b])");
  want(Obligation::Kind::ConstDefined, "*", "F ! FunQ(Q * Q, Q)");
  want(Obligation::Kind::ConstDefined, "e", "E ! Q");
  want(Obligation::Kind::Axiom, "Ax1",
       "forall x, y, z : Q. F (x, F (y, z)) = F (F (x, y), z)");
  want(Obligation::Kind::Axiom, "Ax2",
       "forall x : Q. F (E, x) = F (x, E) = x");
}

TEST_CASE("every graph translation certifies as a morphism") {
  ModuleStore& s = corpus();
  for (const char* name :
       {"MON-to-opposite-monoid", "MON-to-set-monoid", "FUN-COMP-to-ONE-BT",
        "MON-to-ONE-BT", "MON-ACT-to-MON", "MON-ACT-to-ONE-BT-with-SC",
        "first-MON-to-MON-HOM", "second-MON-to-MON-HOM", "MON-HOM-to-MON-4",
        "MON-over-COF-to-STR-2"}) {
    MorphismReport rep = certify_morphism(s, s.translation(name));
    CAPTURE(name);
    CHECK(rep.certified);
  }

  // per-translation discharge profile of two interesting cases
  MorphismReport hom = certify_morphism(s, s.translation("MON-HOM-to-MON-4"));
  CHECK(count_status(hom, ProofStatus::Kind::CheckedFinite) == 2);  // Ax5, Ax6
  MorphismReport str =
      certify_morphism(s, s.translation("MON-over-COF-to-STR-2"));
  CHECK(count_status(str, ProofStatus::Kind::Trusted) == 3);
  CHECK(count_status(str, ProofStatus::Kind::CheckedSyntactic) == 30);
}

TEST_CASE("an unconstrained candidate is rejected, with a countermodel") {
  ModuleStore& s = corpus();
  MorphismReport rep = certify_morphism(s, s.translation("broken-MON-to-T"));
  CHECK(!rep.certified);
  CHECK(count_status(rep, ProofStatus::Kind::Refuted) >= 1);
}

TEST_CASE("transport results match their encoded displayed forms") {
  ModuleStore& s = corpus();
  CHECK(s.transports.size() == 8);
  size_t expects = 0;
  for (const Transport& t : s.transports) {
    for (const auto& [label, ok] : check_expects(s, t)) {
      CAPTURE(t.name);
      CAPTURE(label);
      CHECK(ok);
      expects++;
    }
  }
  // Thm11, Thm12, Thm18-20, Def6, Thm24, Thm25, Thm28, Thm35, Thm36,
  // Def13-15
  CHECK(expects == 14);
}

TEST_CASE("finite validity sweep of the checkable developments") {
  ModuleStore& s = corpus();
  for (const char* name : {"MON-1", "COM-MON-1", "MON-ACT-1", "MON-HOM-1"}) {
    Development d = s.dev(name);  // copy: statuses get filled in
    CAPTURE(name);
    CHECK(check_development(d).empty());
  }
}

TEST_CASE("validity sweep at explicit sizes, larger where budget permits") {
  ModuleStore& s = corpus();
  auto sweep = [&](const std::string& dev_name,
                   const std::vector<std::string>& labels,
                   const std::vector<std::string>& bases, uint64_t max_size) {
    const Development& d = s.dev(dev_name);
    for (uint64_t n = 1; n <= max_size; ++n) {
      SizeSpec sizes;
      for (const std::string& b : bases) sizes.base_sizes[b] = n;
      CAPTURE(dev_name);
      CAPTURE(n);
      // enumerate the bottom theory once per size; each theorem then
      // extends every model with the definitions visible to it
      std::vector<Model> base;
      try {
        base = enumerate_models(d.bottom, sizes);
      } catch (const BudgetExceeded&) {
        CHECK(n == max_size);
        continue;
      }
      CHECK(!base.empty());
      for (size_t i = 0; i < d.packages.size(); ++i) {
        const Package& pkg = d.packages[i];
        if (pkg.kind != Package::Kind::Thm) continue;
        if (std::find(labels.begin(), labels.end(), pkg.label) == labels.end())
          continue;
        CAPTURE(pkg.label);
        Theory vis = d.theory_before(i);
        try {
          for (const Model& m0 : base) {
            Model m = m0;
            Evaluator ev(m);
            bool sat = true;
            for (size_t a = d.bottom.axioms.size(); a < vis.axioms.size();
                 ++a) {
              const ExprPtr& ax = vis.axioms[a].second;
              REQUIRE(ax->tag == Expr::Tag::Eq);  // a defining equation
              auto v = ev.eval(ax->b);
              if (!v) {
                sat = false;
                break;
              }
              m.consts.emplace_back(ax->a->name, *v);
            }
            if (!sat) continue;
            CHECK(ev.is_valid(pkg.body));
          }
        } catch (const BudgetExceeded&) {
          // only the large size may exhaust the budget (iterated set
          // domains); sizes 1 and 2 must always fit
          CHECK(n == max_size);
        }
      }
    }
  };
  sweep("MON-1",
        {"Thm1", "Thm2", "Thm3", "Thm4", "Thm5", "Thm6", "Thm7", "Thm8",
         "Thm9", "Thm10"},
        {"M"}, 3);
  sweep("COM-MON-1", {"Thm13", "Thm14", "Thm15"}, {"M"}, 2);
  sweep("MON-ACT-1", {"Thm21", "Thm22", "Thm23"}, {"M", "S"}, 2);
  sweep("MON-HOM-1", {"Thm26", "Thm27"}, {"M1", "M2"}, 2);
}

TEST_CASE("commutativity fails in some monoid of size three") {
  ModuleStore& s = corpus();
  const Theory& mon = s.theory("MON");
  ExprPtr comm =
      elaborate_term("forall x, y : M. x * y = y * x", mon.language);

  SizeSpec two;
  two.base_sizes["M"] = 2;
  CHECK(!check_validity_at_scale(mon, comm, two).refuted);

  SizeSpec three;
  three.base_sizes["M"] = 3;
  CheckResult res = check_validity_at_scale(mon, comm, three);
  CHECK(res.refuted);
  REQUIRE(res.countermodel.has_value());
  nlohmann::ordered_json m = model_to_json(*res.countermodel, mon.language);
  CHECK(m["sizes"]["M"] == 3);
  CHECK(m["constants"].contains("*"));
  CHECK(m["constants"].contains("e"));
}

TEST_CASE("the development graph has the expected shape") {
  ModuleStore& s = corpus();
  auto manifest = read_manifest(kDir + "/manifest");
  DevGraph g = build_graph(s, manifest.at("nodes"), manifest.at("implicit"));
  CHECK(g.nodes.size() == 12);
  CHECK(g.edges.size() == 18);
  size_t inclusions = 0;
  for (const DevGraph::Edge& e : g.edges)
    if (e.inclusion) inclusions++;
  CHECK(inclusions == 8);

  std::string dot = to_dot(g);
  CHECK(dot.find("MON-over-COF-to-STR-2") != std::string::npos);
  CHECK(dot.find("ONE-BT-with-SC-1") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}
