#ifndef ALONZO_THEORY_HPP
#define ALONZO_THEORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "alonzo/kernel.hpp"

namespace alonzo {

// How a theorem/definition/obligation has been justified.
struct ProofStatus {
  enum class Kind { Trusted, CheckedSyntactic, CheckedFinite, Refuted, Unchecked };
  Kind kind = Kind::Unchecked;
  std::string reference;             // Trusted: citation key; Refuted: countermodel ref
  std::string sizes;                 // CheckedFinite: size spec used
  unsigned long models_checked = 0;  // CheckedFinite
};

struct Theory {
  std::string name;
  Language language;
  std::vector<std::pair<std::string, ExprPtr>> axioms;  // (label, sentence)

  const ExprPtr* axiom(const std::string& label) const;
};

// One step of a development: either a definition (new constant with a
// defining axiom c = definiens) or a theorem.
struct Package {
  enum class Kind { Def, Thm };
  Kind kind;
  std::string label;
  std::string const_name;  // Def only
  TypePtr const_ty;        // Def only
  ExprPtr body;            // Def: definiens; Thm: sentence
  ProofStatus proof;
  std::string caption;
};

struct Development {
  std::string name;
  Theory bottom;
  std::vector<Package> packages;

  // bottom + all definition constants and defining axioms, left to right
  Theory top_theory() const;
  // theory visible to the package at index i (definitions strictly before i)
  Theory theory_before(size_t i) const;
  const Package* package(const std::string& label) const;
  size_t count_defs() const;
  size_t count_thms() const;
};

}  // namespace alonzo

#endif
