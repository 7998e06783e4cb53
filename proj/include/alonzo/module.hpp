#ifndef ALONZO_MODULE_HPP
#define ALONZO_MODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "alonzo/surface.hpp"
#include "alonzo/theory.hpp"

// Module files (.alz): named theories, developments over them,
// translations between theories, and transports of development packages
// along certified translations.
namespace alonzo {

// A signature morphism candidate: maps the source theory's base types to
// types or quasitypes of the target and (some of) its constants to
// target expressions.  Constants without an explicit image fall back to
// the target constant of the same name, if one exists at the translated
// type.
struct Translation {
  std::string name;
  std::string src, tgt;     // theory names
  std::string using_dev;    // optional development supplying the discharge context
  std::vector<std::pair<std::string, Carrier>> base_map;
  std::vector<std::pair<std::string, ExprPtr>> const_map;
  // obligation discharges by citation; keys are axiom labels, or
  // "base <b>" / "const <c>" for the other obligation kinds
  std::map<std::string, std::string> trusted;
  std::string check_sizes;  // e.g. "U=2,S=1"; empty disables finite search

  const Carrier* base_image(const std::string& b) const;
  const ExprPtr* const_image(const std::string& c) const;
};

struct TransportItem {
  std::string src_label;
  std::string new_label;  // defaults to src_label
  std::string new_const;  // definitions only
};

struct Transport {
  std::string name;
  std::string from_dev, via, to_dev, yields, morphism;
  std::vector<TransportItem> items;
  // expected shapes of transported packages, kept as parse trees and
  // elaborated against the yielded development's language
  std::vector<std::pair<std::string, SPtr>> expects;
};

struct ModuleStore {
  std::vector<std::string> theory_order, dev_order, translation_order;
  std::map<std::string, Theory> theories;
  std::map<std::string, Development> devs;
  std::map<std::string, Translation> translations;
  std::vector<Transport> transports;
  // direct extension parents, recorded as bottom-theory names
  std::map<std::string, std::vector<std::string>> extends;

  const Theory& theory(const std::string& name) const;
  const Development& dev(const std::string& name) const;
  const Translation& translation(const std::string& name) const;
  // target-side theory a translation is checked against: the target's
  // top theory extended with the using-development's definitions
  Theory discharge_context(const Translation& t) const;
  // theorem sentences available in the discharge context
  std::vector<std::pair<std::string, ExprPtr>> discharge_theorems(
      const Translation& t) const;
};

// Parse the module declarations in `text` into the store.  Transports
// are applied immediately: the yielded development becomes available to
// later declarations.
void load_module_text(ModuleStore& store, const std::string& text);
void load_module_file(ModuleStore& store, const std::string& path);

// Flat key/value manifest: one `key = v1 v2 ...` per line, `#` comments.
std::map<std::string, std::vector<std::string>> read_manifest(
    const std::string& path);

// Load the corpus directory: reads `manifest`, then every file in its
// `files` entry, in order.
ModuleStore load_corpus(const std::string& dir);

}  // namespace alonzo

#endif
