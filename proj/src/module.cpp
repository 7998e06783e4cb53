#include <fstream>
#include <sstream>

#include "alonzo/graph.hpp"
#include "alonzo/module.hpp"

namespace alonzo {

const Carrier* Translation::base_image(const std::string& b) const {
  for (const auto& [name, c] : base_map)
    if (name == b) return &c;
  return nullptr;
}

const ExprPtr* Translation::const_image(const std::string& c) const {
  for (const auto& [name, e] : const_map)
    if (name == c) return &e;
  return nullptr;
}

const Theory& ModuleStore::theory(const std::string& name) const {
  auto it = theories.find(name);
  if (it == theories.end()) throw ParseError("unknown theory '" + name + "'");
  return it->second;
}

const Development& ModuleStore::dev(const std::string& name) const {
  auto it = devs.find(name);
  if (it == devs.end())
    throw ParseError("unknown development '" + name + "'");
  return it->second;
}

const Translation& ModuleStore::translation(const std::string& name) const {
  auto it = translations.find(name);
  if (it == translations.end())
    throw ParseError("unknown translation '" + name + "'");
  return it->second;
}

Theory ModuleStore::discharge_context(const Translation& t) const {
  if (t.using_dev.empty()) return theory(t.tgt);
  const Development& d = dev(t.using_dev);
  if (d.bottom.name != t.tgt)
    throw ParseError("translation " + t.name + " uses development " +
                     t.using_dev + " which is not over its target theory");
  return d.top_theory();
}

std::vector<std::pair<std::string, ExprPtr>> ModuleStore::discharge_theorems(
    const Translation& t) const {
  std::vector<std::pair<std::string, ExprPtr>> out;
  if (t.using_dev.empty()) return out;
  for (const Package& p : dev(t.using_dev).packages)
    if (p.kind == Package::Kind::Thm) out.emplace_back(p.label, p.body);
  return out;
}

namespace {

ExprPtr elab_term(Parser& p, const Language& L) {
  ElabContext ctx;
  ctx.language = &L;
  ExprPtr e = elaborate(p.parse_term(), ctx);
  infer_type(e);
  return e;
}

Carrier elab_carrier(Parser& p, const Language& L) {
  ElabContext ctx;
  ctx.language = &L;
  return elaborate_domain(p.parse_domain(), ctx);
}

TypePtr elab_type(Parser& p, const Language& L) {
  Carrier c = elab_carrier(p, L);
  if (!c.is_plain())
    p.fail("expected a plain type, found a quasitype");
  return c.ty;
}

// a theory/development/translation/package name or label
std::string name_tok(Parser& p) {
  if (p.peek().kind != Token::Kind::Word) p.fail("expected a name");
  return p.next().text;
}

// a constant name: a word or a symbolic token such as * or <=
std::string const_name_tok(Parser& p) {
  if (p.peek().kind == Token::Kind::Word || p.peek().kind == Token::Kind::Sym)
    return p.next().text;
  p.fail("expected a constant name");
}

std::string opt_string(Parser& p) {
  if (p.peek().kind == Token::Kind::Str) return p.next().text;
  return "";
}

std::string req_string(Parser& p) {
  if (p.peek().kind != Token::Kind::Str) p.fail("expected a string literal");
  return p.next().text;
}

void merge_language(Language& into, const Language& from, Parser& p) {
  for (const std::string& b : from.base_types) into.base_types.insert(b);
  for (const auto& [c, ty] : from.constants) {
    if (const TypePtr* have = into.constant_type(c)) {
      if (!type_eq(*have, ty))
        p.fail("constant '" + c + "' inherited at two different types");
      continue;
    }
    into.add_constant(c, ty);
  }
}

void parse_theory(ModuleStore& store, Parser& p) {
  Theory T;
  T.name = name_tok(p);
  if (store.theories.count(T.name))
    p.fail("theory '" + T.name + "' already defined");
  if (p.eat_word("extends")) {
    do {
      std::string parent = name_tok(p);
      // a development name resolves to its top theory
      const Theory* pt = nullptr;
      Theory top;
      std::string parent_theory = parent;
      if (store.devs.count(parent)) {
        top = store.devs.at(parent).top_theory();
        pt = &top;
        parent_theory = store.devs.at(parent).bottom.name;
      } else {
        pt = &store.theory(parent);
      }
      merge_language(T.language, pt->language, p);
      for (const auto& [lbl, ax] : pt->axioms)
        if (!T.axiom(lbl)) T.axioms.emplace_back(lbl, ax);
      store.extends[T.name].push_back(parent_theory);
    } while (p.eat_sym(","));
  }
  p.expect_sym("{");
  while (!p.eat_sym("}")) {
    if (p.eat_word("base")) {
      T.language.base_types.insert(name_tok(p));
      p.expect_sym(";");
    } else if (p.eat_word("const")) {
      std::string c = const_name_tok(p);
      p.expect_sym(":");
      TypePtr ty = elab_type(p, T.language);
      if (T.language.constant_type(c))
        p.fail("constant '" + c + "' already declared");
      T.language.add_constant(c, ty);
      p.expect_sym(";");
    } else if (p.eat_word("axiom")) {
      std::string lbl = name_tok(p);
      opt_string(p);  // caption, informational only
      p.expect_sym(":");
      ExprPtr ax = elab_term(p, T.language);
      if (!type_eq(infer_type(ax), bool_ty()))
        p.fail("axiom " + lbl + " is not a sentence");
      if (T.axiom(lbl)) p.fail("axiom " + lbl + " already present");
      T.axioms.emplace_back(lbl, ax);
      p.expect_sym(";");
    } else {
      p.fail("expected base, const, or axiom");
    }
  }
  std::string tname = T.name;
  store.theories.emplace(tname, std::move(T));
  store.theory_order.push_back(tname);
}

ProofStatus parse_proof_annot(Parser& p) {
  ProofStatus st;
  if (p.eat_word("by")) {
    if (p.eat_word("trusted")) {
      st.kind = ProofStatus::Kind::Trusted;
      st.reference = req_string(p);
    } else if (p.eat_word("checked")) {
      st.kind = ProofStatus::Kind::Unchecked;  // filled in by the checker
      st.sizes = req_string(p);
    } else {
      p.fail("expected trusted or checked");
    }
  }
  return st;
}

void parse_development(ModuleStore& store, Parser& p) {
  Development d;
  d.name = name_tok(p);
  if (store.devs.count(d.name))
    p.fail("development '" + d.name + "' already defined");
  if (p.eat_word("of")) {
    d.bottom = store.theory(name_tok(p));
  } else if (p.eat_word("extends")) {
    const Development& base = store.dev(name_tok(p));
    d.bottom = base.bottom;
    d.packages = base.packages;
  } else {
    p.fail("expected 'of <theory>' or 'extends <development>'");
  }
  p.expect_sym("{");
  while (!p.eat_sym("}")) {
    if (p.eat_word("include")) {
      // inclusion convention: packages over a subtheory are visible here
      const Development& inc = store.dev(name_tok(p));
      Theory top = d.top_theory();
      for (const Package& pkg : inc.packages) {
        if (d.package(pkg.label))
          p.fail("included package " + pkg.label + " clashes");
        if (pkg.kind == Package::Kind::Def &&
            top.language.constant_type(pkg.const_name))
          p.fail("included constant " + pkg.const_name + " clashes");
        d.packages.push_back(pkg);
      }
      p.expect_sym(";");
    } else if (p.eat_word("def")) {
      Package pkg;
      pkg.kind = Package::Kind::Def;
      pkg.label = name_tok(p);
      pkg.caption = opt_string(p);
      pkg.const_name = const_name_tok(p);
      p.expect_sym(":");
      Theory top = d.top_theory();
      if (top.language.constant_type(pkg.const_name))
        p.fail("constant '" + pkg.const_name + "' already declared");
      pkg.const_ty = elab_type(p, top.language);
      p.expect_sym(":=");
      pkg.body = elab_term(p, top.language);
      if (!type_eq(infer_type(pkg.body), pkg.const_ty))
        p.fail("definiens of " + pkg.label + " has type " +
               show_type(infer_type(pkg.body)) + ", expected " +
               show_type(pkg.const_ty));
      p.expect_sym(";");
      d.packages.push_back(std::move(pkg));
    } else if (p.eat_word("thm")) {
      Package pkg;
      pkg.kind = Package::Kind::Thm;
      pkg.label = name_tok(p);
      pkg.caption = opt_string(p);
      pkg.proof = parse_proof_annot(p);
      p.expect_sym(":");
      pkg.body = elab_term(p, d.top_theory().language);
      if (!type_eq(infer_type(pkg.body), bool_ty()))
        p.fail("theorem " + pkg.label + " is not a sentence");
      p.expect_sym(";");
      d.packages.push_back(std::move(pkg));
    } else {
      p.fail("expected include, def, or thm");
    }
  }
  std::string dname = d.name;
  store.dev_order.push_back(dname);
  store.devs.emplace(dname, std::move(d));
}

void parse_translation(ModuleStore& store, Parser& p) {
  Translation t;
  t.name = name_tok(p);
  if (store.translations.count(t.name))
    p.fail("translation '" + t.name + "' already defined");
  p.expect_sym(":");
  t.src = name_tok(p);
  p.expect_sym("->");
  t.tgt = name_tok(p);
  if (p.eat_word("using")) t.using_dev = name_tok(p);
  const Theory& S = store.theory(t.src);
  Theory ctx = store.discharge_context(t);
  p.expect_sym("{");
  while (!p.eat_sym("}")) {
    if (p.eat_word("base")) {
      std::string b = name_tok(p);
      if (!S.language.has_base(b))
        p.fail("'" + b + "' is not a base type of " + t.src);
      p.expect_sym("=>");
      t.base_map.emplace_back(b, elab_carrier(p, ctx.language));
      p.expect_sym(";");
    } else if (p.eat_word("const")) {
      std::string c = const_name_tok(p);
      if (!S.language.constant_type(c))
        p.fail("'" + c + "' is not a constant of " + t.src);
      p.expect_sym("=>");
      t.const_map.emplace_back(c, elab_term(p, ctx.language));
      p.expect_sym(";");
    } else if (p.eat_word("trust")) {
      std::string key;
      if (p.at_word("base") || p.at_word("const")) {
        key = p.next().text;
        key += " " + const_name_tok(p);
      } else {
        key = name_tok(p);
      }
      t.trusted[key] = req_string(p);
      p.expect_sym(";");
    } else if (p.eat_word("sizes")) {
      t.check_sizes = req_string(p);
      p.expect_sym(";");
    } else {
      p.fail("expected base, const, trust, or sizes");
    }
  }
  for (const std::string& b : S.language.base_types)
    if (!t.base_image(b))
      p.fail("translation " + t.name + " does not map base type " + b);
  std::string trname = t.name;
  store.translation_order.push_back(trname);
  store.translations.emplace(trname, std::move(t));
}

void parse_transport(ModuleStore& store, Parser& p) {
  Transport t;
  t.name = name_tok(p);
  p.expect_sym("{");
  while (!p.eat_sym("}")) {
    if (p.eat_word("from")) {
      t.from_dev = name_tok(p);
      p.expect_sym(";");
    } else if (p.eat_word("via")) {
      t.via = name_tok(p);
      p.expect_sym(";");
    } else if (p.eat_word("to")) {
      t.to_dev = name_tok(p);
      p.expect_sym(";");
    } else if (p.eat_word("yields")) {
      t.yields = name_tok(p);
      p.expect_sym(";");
    } else if (p.eat_word("morphism")) {
      t.morphism = name_tok(p);
      p.expect_sym(";");
    } else if (p.eat_word("item")) {
      TransportItem item;
      item.src_label = name_tok(p);
      item.new_label = item.src_label;
      if (p.eat_word("as")) item.new_label = name_tok(p);
      if (p.eat_word("const")) item.new_const = const_name_tok(p);
      t.items.push_back(std::move(item));
      p.expect_sym(";");
    } else if (p.eat_word("expect")) {
      std::string lbl = name_tok(p);
      p.expect_sym(":");
      t.expects.emplace_back(lbl, p.parse_term());
      p.expect_sym(";");
    } else {
      p.fail("expected from, via, to, yields, morphism, item, or expect");
    }
  }
  if (t.from_dev.empty() || t.via.empty() || t.to_dev.empty() ||
      t.yields.empty())
    p.fail("transport " + t.name + " needs from, via, to, and yields");
  if (store.devs.count(t.yields))
    p.fail("development '" + t.yields + "' already defined");
  Development result = transport_apply(store, t);
  store.dev_order.push_back(t.yields);
  store.devs.emplace(t.yields, std::move(result));
  store.transports.push_back(std::move(t));
}

}  // namespace

void load_module_text(ModuleStore& store, const std::string& text) {
  Parser p(text);
  while (p.peek().kind != Token::Kind::End) {
    if (p.eat_word("theory"))
      parse_theory(store, p);
    else if (p.eat_word("development"))
      parse_development(store, p);
    else if (p.eat_word("translation"))
      parse_translation(store, p);
    else if (p.eat_word("transport"))
      parse_transport(store, p);
    else
      p.fail("expected theory, development, translation, or transport");
  }
}

void load_module_file(ModuleStore& store, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open module file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    load_module_text(store, buf.str());
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::map<std::string, std::vector<std::string>> read_manifest(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest " + path);
  std::map<std::string, std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    size_t eqp = line.find('=');
    if (eqp == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eqp));
    std::istringstream vals(line.substr(eqp + 1));
    std::vector<std::string> vs;
    std::string v;
    while (vals >> v) vs.push_back(v);
    if (!key.empty()) out[key] = std::move(vs);
  }
  return out;
}

ModuleStore load_corpus(const std::string& dir) {
  ModuleStore store;
  auto manifest = read_manifest(dir + "/manifest");
  auto it = manifest.find("files");
  if (it == manifest.end())
    throw ParseError("manifest has no 'files' entry");
  for (const std::string& f : it->second)
    load_module_file(store, dir + "/" + f);
  return store;
}

}  // namespace alonzo
