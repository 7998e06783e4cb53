#ifndef ALONZO_KERNEL_HPP
#define ALONZO_KERNEL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "alonzo/expr.hpp"

namespace alonzo {

// A language: finitely many base types plus typed constants.
struct Language {
  std::set<std::string> base_types;
  // declaration-ordered constants; names are unique
  std::vector<std::pair<std::string, TypePtr>> constants;

  bool has_base(const std::string& b) const { return base_types.count(b) != 0; }
  const TypePtr* constant_type(const std::string& c) const;
  void add_constant(const std::string& c, TypePtr ty);
};

// A variable occurrence: (name, type).
struct VarKey {
  std::string name;
  TypePtr ty;
  bool operator<(const VarKey& o) const;
  bool operator==(const VarKey& o) const;
};

// Unique type of a well-formed expression; throws TypeError otherwise.
TypePtr infer_type(const ExprPtr& e);

// True iff every base type of e is declared in L and every constant of e
// appears in L with the same type.
bool check_in_language(const ExprPtr& e, const Language& L);

std::set<VarKey> free_vars(const ExprPtr& e);

bool is_closed(const ExprPtr& e);

// Deterministic fresh-name supply for one rewrite session: appends a
// numeric suffix from a shared counter.
struct FreshGen {
  unsigned long counter = 0;
  std::string fresh(const std::string& base);
};

// Capture-avoiding substitution of a for free occurrences of x in e.
ExprPtr substitute(const ExprPtr& e, const VarKey& x, const ExprPtr& a,
                   FreshGen& gen);
ExprPtr substitute(const ExprPtr& e, const VarKey& x, const ExprPtr& a);

bool alpha_eq(const ExprPtr& x, const ExprPtr& y);

// Normal-order beta reduction with a step budget; a syntactic simplifier
// only (semantic evaluation always works on unreduced terms).
ExprPtr beta_reduce(const ExprPtr& e, unsigned long budget = 10000);

// Raw (unsugared) rendering, for diagnostics.
std::string show_expr(const ExprPtr& e);

}  // namespace alonzo

#endif
