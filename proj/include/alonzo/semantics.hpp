#ifndef ALONZO_SEMANTICS_HPP
#define ALONZO_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "alonzo/theory.hpp"

namespace alonzo {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite sizes for base domains plus the evaluation budgets.
struct SizeSpec {
  std::map<std::string, std::uint64_t> base_sizes;
  std::uint64_t domain_budget = 1'000'000;        // max elements of any iterated domain
  std::uint64_t enumeration_budget = 20'000'000;  // max candidate interpretations

  std::uint64_t size_of(const std::string& base) const;
};

// Every element of a finite domain is identified by its index in the
// canonical enumeration of that domain: Bool is {0:F, 1:T}; base-type
// atoms are indexed directly; products are fst-major; functions are
// digit strings over the argument enumeration (most significant digit =
// argument 0), with one extra digit value meaning "undefined" for
// non-predicate function types.  Predicate domains (cod = o) contain
// total functions only.
using Val = std::uint64_t;

// Cardinality of the domain of t; nullopt when it does not fit in 64 bits.
std::optional<Val> domain_card(const TypePtr& t, const SizeSpec& s);

// Cardinality for iteration; throws BudgetExceeded when unknown or over
// the domain budget.
Val iter_card(const TypePtr& t, const SizeSpec& s);

// An interpretation: sizes plus one value per constant.
struct Model {
  SizeSpec sizes;
  std::vector<std::pair<std::string, Val>> consts;
  const Val* value_of(const std::string& name) const;
};

// Per-domain size report for the types needed by a language at given sizes.
std::vector<std::pair<std::string, std::optional<Val>>> frame_report(
    const Language& L, const SizeSpec& s);

// The partial valuation function.  Undefinedness is the absent optional.
class Evaluator {
 public:
  explicit Evaluator(const Model& m) : model_(m) {}

  std::optional<Val> eval(const ExprPtr& e);  // closed terms
  // open terms: phi gives values for free variables (innermost last)
  std::optional<Val> eval(const ExprPtr& e,
                          std::vector<std::pair<VarKey, Val>>& phi);
  // true in the model under every assignment to the free variables
  bool is_valid(const ExprPtr& sentence);

 private:
  const Model& model_;
  // memo keys keep their expression alive so a recycled allocation can
  // never collide with a stale entry
  std::unordered_map<const Expr*, std::pair<ExprPtr, TypePtr>> ty_memo_;
  // propositional connectives recognized by shape, so they are
  // evaluated on their operands instead of materializing the tables of
  // their abstraction templates
  struct Conn {
    enum class Kind { None, Not, And, Or, Implies } kind = Kind::None;
    ExprPtr a, b;
    ExprPtr self;  // keeps the memo key alive
  };
  std::unordered_map<const Expr*, Conn> conn_memo_;

  const TypePtr& type_of(const ExprPtr& e);
  std::optional<Val> ev(const ExprPtr& e,
                        std::vector<std::pair<VarKey, Val>>& env);
};

// All standard models of T at the given sizes, in deterministic
// (lexicographic) order.  Constants whose sole axiom is a defining
// equation c = definiens are computed rather than enumerated.
std::vector<Model> enumerate_models(const Theory& T, const SizeSpec& s,
                                    bool parallel = true);

struct CheckResult {
  bool refuted = false;
  std::uint64_t models_checked = 0;
  std::optional<Model> countermodel;
};

// Refuted with the first countermodel in enumeration order, or
// NoCounterexample with the number of models checked.
CheckResult check_validity_at_scale(const Theory& T, const ExprPtr& sentence,
                                    const SizeSpec& s, bool parallel = true);

// Structural JSON decoding of a model (function tables as arrays with
// null for undefined entries).
nlohmann::ordered_json model_to_json(const Model& m, const Language& L);
nlohmann::ordered_json value_to_json(Val v, const TypePtr& ty,
                                     const SizeSpec& s);

}  // namespace alonzo

#endif
