#ifndef ALONZO_GRAPH_HPP
#define ALONZO_GRAPH_HPP

#include "alonzo/module.hpp"
#include "alonzo/semantics.hpp"

// The little-theories machinery: translating types and expressions along
// a translation, generating and discharging the proof obligations that
// certify it as a morphism, transporting definitions and theorems, and
// the development graph itself.
namespace alonzo {

struct ClashError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Underlying type of the image of a source type.
TypePtr translate_type(const Translation& t, const TypePtr& ty);
// Image as a type or quasitype; compound carriers are rebuilt from the
// base images with the quasitype formers.
Carrier translate_carrier(const Translation& t, const TypePtr& ty);
// Image of a source expression in the target language.  Universal
// quantification over a type whose carrier image is a quasitype becomes
// quantification relativized to that quasitype.
ExprPtr translate_expr(const Translation& t, const Language& tgt,
                       const ExprPtr& e);

struct Obligation {
  enum class Kind { BaseNonEmpty, ConstDefined, Axiom };
  Kind kind;
  std::string about;  // base name, constant name, or axiom label
  ExprPtr sentence;   // in the target language
  ProofStatus status;
};

// The proof obligations of a translation, in declaration order: one per
// base type mapped to a proper quasitype (its nonemptiness), one per
// explicitly mapped constant (definedness of the image in the image
// carrier), and one per source axiom (its translation).
std::vector<Obligation> obligations(const ModuleStore& store,
                                    const Translation& t);

struct MorphismReport {
  std::string translation;
  std::vector<Obligation> obligations;
  bool certified = false;
};

// Discharge the obligations: citations first, then syntactic matching
// against the discharge context (alpha-equivalence after splitting
// conjunctions under a shared quantifier prefix, expanding equation
// chains, and closing under symmetry/transitivity), then finite model
// search at the translation's declared sizes.
MorphismReport certify_morphism(const ModuleStore& store, const Translation& t,
                                bool parallel = true);

// Apply a transport: translate the chosen packages of the source
// development and append them to the target development.  Transported
// definitions extend the translation canonically (source constant to new
// target constant), so later items may depend on earlier ones.  Throws
// ClashError if a new constant name already exists in the target.
Development transport_apply(const ModuleStore& store, const Transport& t);

// Elaborate and compare each `expect` of the transport against the
// yielded development (already in the store).
std::vector<std::pair<std::string, bool>> check_expects(
    const ModuleStore& store, const Transport& t);

// "U=2,S=1" into a size specification
SizeSpec parse_sizes(const std::string& spec);

// Finite checking of the theorems of a development annotated `by
// checked "<sizes>"`; fills in the proof status and returns the labels
// of any refuted theorems.
std::vector<std::string> check_development(Development& d,
                                           bool parallel = true);

struct DevGraph {
  struct Node {
    std::string name;
    std::string theory;  // bottom theory name
    bool is_dev = false;
  };
  struct Edge {
    std::string src, tgt;
    std::string label;  // translation name; empty for inclusions
    bool inclusion = false;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

// Nodes are the manifest-listed developments/theories; edges are the
// translations between node theories plus the direct theory extensions
// and the declared implicit inclusions ("A>B" strings).
DevGraph build_graph(const ModuleStore& store,
                     const std::vector<std::string>& node_names,
                     const std::vector<std::string>& implicit_inclusions);

std::string to_dot(const DevGraph& g);

}  // namespace alonzo

#endif
