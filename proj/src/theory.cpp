#include "alonzo/theory.hpp"

namespace alonzo {

const ExprPtr* Theory::axiom(const std::string& label) const {
  for (const auto& [l, s] : axioms)
    if (l == label) return &s;
  return nullptr;
}

Theory Development::theory_before(size_t i) const {
  Theory t = bottom;
  t.name = name + ".at." + std::to_string(i);
  for (size_t k = 0; k < i && k < packages.size(); ++k) {
    const Package& p = packages[k];
    if (p.kind != Package::Kind::Def) continue;
    t.language.add_constant(p.const_name, p.const_ty);
    t.axioms.emplace_back(p.label, eq(cnst(p.const_name, p.const_ty), p.body));
  }
  return t;
}

Theory Development::top_theory() const {
  Theory t = theory_before(packages.size());
  t.name = name + ".top";
  return t;
}

const Package* Development::package(const std::string& label) const {
  for (const auto& p : packages)
    if (p.label == label) return &p;
  return nullptr;
}

size_t Development::count_defs() const {
  size_t n = 0;
  for (const auto& p : packages)
    if (p.kind == Package::Kind::Def) ++n;
  return n;
}

size_t Development::count_thms() const {
  size_t n = 0;
  for (const auto& p : packages)
    if (p.kind == Package::Kind::Thm) ++n;
  return n;
}

}  // namespace alonzo
