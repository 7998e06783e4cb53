// The alonzo command line tool: batch front end for checking module
// files, enumerating models, listing morphism obligations, replaying
// transports, exporting the development graph, and formatting sources.
//
// Exit codes: 0 ok, 1 refutation or rejection, 2 parse/type error,
// 3 budget exhausted.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "alonzo/graph.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace alonzo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::vector<std::string> paths;
  std::string emit = "text";
  std::string sizes;
  std::string dev, thm, theory, name;
  int jobs = 0;
  bool write = false;
};

std::uint64_t budget_override() {
  const char* v = std::getenv("ALONZO_BUDGET");
  if (!v || !*v) return 0;
  return std::strtoull(v, nullptr, 10);
}

void apply_budget(SizeSpec& s) {
  if (std::uint64_t b = budget_override()) s.domain_budget = b;
}

// A corpus directory (with its manifest) or individual module files.
ModuleStore load_paths(const std::vector<std::string>& paths) {
  if (paths.size() == 1 && fs::is_directory(paths[0]))
    return load_corpus(paths[0]);
  ModuleStore store;
  for (const std::string& p : paths) load_module_file(store, p);
  return store;
}

std::string status_name(ProofStatus::Kind k) {
  switch (k) {
    case ProofStatus::Kind::Trusted: return "Trusted";
    case ProofStatus::Kind::CheckedSyntactic: return "CheckedSyntactic";
    case ProofStatus::Kind::CheckedFinite: return "CheckedFinite";
    case ProofStatus::Kind::Refuted: return "Refuted";
    case ProofStatus::Kind::Unchecked: return "Unchecked";
  }
  return "?";
}

// Size specifications: "M=2,S=1" names the bases explicitly; "2" or
// "1..3" sets every base type of the theory to each size in the range.
std::vector<SizeSpec> size_specs(const std::string& spec, const Theory& T) {
  std::vector<SizeSpec> out;
  if (spec.find('=') != std::string::npos) {
    out.push_back(parse_sizes(spec));
  } else {
    std::uint64_t lo = 0, hi = 0;
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::strtoull(spec.c_str(), nullptr, 10);
    } else {
      lo = std::strtoull(spec.substr(0, dots).c_str(), nullptr, 10);
      hi = std::strtoull(spec.substr(dots + 2).c_str(), nullptr, 10);
    }
    if (lo == 0 || hi < lo) throw ParseError("bad size range '" + spec + "'");
    for (std::uint64_t n = lo; n <= hi; ++n) {
      SizeSpec s;
      for (const std::string& b : T.language.base_types) s.base_sizes[b] = n;
      out.push_back(s);
    }
  }
  for (SizeSpec& s : out) apply_budget(s);
  return out;
}

std::string show_sizes(const SizeSpec& s) {
  std::string out;
  for (const auto& [b, n] : s.base_sizes) {
    if (!out.empty()) out += ",";
    out += b + "=" + std::to_string(n);
  }
  return out;
}

void print_frame_report(const Language& L, const SizeSpec& s) {
  std::cout << "  domains at " << show_sizes(s) << ":";
  for (const auto& [ty, card] : frame_report(L, s)) {
    std::cout << " " << ty << "=";
    if (card)
      std::cout << *card;
    else
      std::cout << "overflow";
  }
  std::cout << "\n";
}

int cmd_check(const Options& opt, bool parallel) {
  ModuleStore store = load_paths(opt.paths);
  bool refuted = false, budget = false;
  ordered_json report = ordered_json::array();
  for (const std::string& dname : store.dev_order) {
    if (!opt.dev.empty() && dname != opt.dev) continue;
    const Development& d = store.dev(dname);
    for (size_t i = 0; i < d.packages.size(); ++i) {
      const Package& pkg = d.packages[i];
      if (pkg.kind != Package::Kind::Thm) continue;
      if (!opt.thm.empty() && pkg.label != opt.thm) continue;
      Theory vis = d.theory_before(i);
      std::vector<SizeSpec> specs;
      std::string how;
      if (!opt.sizes.empty()) {
        specs = size_specs(opt.sizes, vis);
      } else if (!pkg.proof.sizes.empty()) {
        SizeSpec declared = parse_sizes(pkg.proof.sizes);
        apply_budget(declared);
        bool covered = true;
        for (const std::string& b : vis.language.base_types)
          if (!declared.base_sizes.count(b)) covered = false;
        if (covered) {
          specs.push_back(std::move(declared));
        } else {
          // a theorem included from a development over a smaller language:
          // its declared sizes say nothing about the new bases
          how = "Skipped (sizes \"" + pkg.proof.sizes +
                "\" do not cover every base type)";
        }
      } else {
        how = status_name(pkg.proof.kind);  // nothing to search
        if (!pkg.proof.reference.empty()) how += " (" + pkg.proof.reference + ")";
      }
      ordered_json entry;
      entry["dev"] = dname;
      entry["thm"] = pkg.label;
      ordered_json runs = ordered_json::array();
      for (const SizeSpec& s : specs) {
        ordered_json run;
        run["sizes"] = show_sizes(s);
        try {
          CheckResult res = check_validity_at_scale(vis, pkg.body, s, parallel);
          if (res.refuted) {
            refuted = true;
            run["status"] = "Refuted";
            if (res.countermodel)
              run["countermodel"] =
                  model_to_json(*res.countermodel, vis.language);
          } else {
            run["status"] = "NoCounterexample";
            run["models"] = res.models_checked;
          }
        } catch (const BudgetExceeded& e) {
          budget = true;
          run["status"] = "Budget";
          run["detail"] = e.what();
        }
        runs.push_back(std::move(run));
      }
      if (!how.empty()) entry["status"] = how;
      if (!runs.empty()) entry["runs"] = std::move(runs);
      if (opt.emit == "text") {
        std::cout << dname << "." << pkg.label;
        if (entry.contains("status")) std::cout << "  " << entry["status"].get<std::string>();
        for (const auto& run : entry.value("runs", ordered_json::array())) {
          std::cout << "  [" << run["sizes"].get<std::string>() << " "
                    << run["status"].get<std::string>();
          if (run.contains("models"))
            std::cout << " models=" << run["models"].get<std::uint64_t>();
          std::cout << "]";
        }
        std::cout << "\n";
        for (const auto& run : entry.value("runs", ordered_json::array()))
          if (run.contains("countermodel"))
            std::cout << "  countermodel: " << run["countermodel"].dump()
                      << "\n";
      }
      report.push_back(std::move(entry));
    }
  }
  if (opt.emit == "json") std::cout << report.dump(2) << "\n";
  if (refuted) return kExitRefuted;
  if (budget) return kExitBudget;
  return kExitOk;
}

int cmd_models(const Options& opt, bool parallel) {
  ModuleStore store = load_paths(opt.paths);
  const Theory& T = store.theory(opt.theory);
  std::vector<SizeSpec> specs =
      size_specs(opt.sizes.empty() ? "2" : opt.sizes, T);
  bool budget = false;
  ordered_json report = ordered_json::array();
  for (const SizeSpec& s : specs) {
    if (opt.emit == "text") print_frame_report(T.language, s);
    try {
      std::vector<Model> models = enumerate_models(T, s, parallel);
      if (opt.emit == "text")
        std::cout << T.name << " at " << show_sizes(s) << ": "
                  << models.size() << " model(s)\n";
      for (const Model& m : models) {
        ordered_json j = model_to_json(m, T.language);
        if (opt.emit == "text")
          std::cout << "  " << j.dump() << "\n";
        else
          report.push_back(std::move(j));
      }
    } catch (const BudgetExceeded& e) {
      budget = true;
      if (opt.emit == "text")
        std::cout << T.name << " at " << show_sizes(s) << ": budget ("
                  << e.what() << ")\n";
    }
  }
  if (opt.emit == "json") std::cout << report.dump(2) << "\n";
  return budget ? kExitBudget : kExitOk;
}

int cmd_obligations(const Options& opt, bool parallel) {
  ModuleStore store = load_paths(opt.paths);
  MorphismReport rep =
      certify_morphism(store, store.translation(opt.name), parallel);
  ordered_json report;
  report["translation"] = rep.translation;
  report["certified"] = rep.certified;
  ordered_json obs = ordered_json::array();
  for (const Obligation& ob : rep.obligations) {
    ordered_json j;
    j["kind"] = ob.kind == Obligation::Kind::BaseNonEmpty ? "base-nonempty"
                : ob.kind == Obligation::Kind::ConstDefined ? "const-defined"
                                                            : "axiom";
    j["about"] = ob.about;
    j["status"] = status_name(ob.status.kind);
    if (!ob.status.reference.empty()) j["reference"] = ob.status.reference;
    j["sentence"] = fmt_expr(ob.sentence);
    obs.push_back(std::move(j));
  }
  report["obligations"] = std::move(obs);
  bool refuted = false;
  for (const Obligation& ob : rep.obligations)
    if (ob.status.kind == ProofStatus::Kind::Refuted) refuted = true;
  if (opt.emit == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& j : report["obligations"])
      std::cout << j["kind"].get<std::string>() << " " << j["about"].get<std::string>()
                << "  " << j["status"].get<std::string>()
                << (j.contains("reference")
                        ? " (" + j["reference"].get<std::string>() + ")"
                        : "")
                << "\n    " << j["sentence"].get<std::string>() << "\n";
    std::cout << rep.translation << ": "
              << (rep.certified ? "certified morphism"
                  : refuted     ? "REJECTED"
                                : "not certified (undischarged obligations)")
              << "\n";
  }
  return refuted ? kExitRefuted : kExitOk;
}

int cmd_transport(const Options& opt) {
  ModuleStore store = load_paths(opt.paths);
  bool failed = false;
  ordered_json report = ordered_json::array();
  for (const Transport& t : store.transports) {
    if (!opt.name.empty() && t.name != opt.name) continue;
    ordered_json j;
    j["transport"] = t.name;
    j["from"] = t.from_dev;
    j["via"] = t.via;
    j["yields"] = t.yields;
    ordered_json checks = ordered_json::array();
    for (const auto& [label, ok] : check_expects(store, t)) {
      if (!ok) failed = true;
      ordered_json c;
      c["label"] = label;
      c["matches"] = ok;
      checks.push_back(std::move(c));
    }
    j["expects"] = std::move(checks);
    if (opt.emit == "text") {
      std::cout << t.name << ": " << t.from_dev << " --" << t.via << "--> "
                << t.yields << "\n";
      for (const auto& c : j["expects"])
        std::cout << "  expect " << c["label"].get<std::string>() << ": "
                  << (c["matches"].get<bool>() ? "matches" : "MISMATCH")
                  << "\n";
    }
    report.push_back(std::move(j));
  }
  if (opt.emit == "json") std::cout << report.dump(2) << "\n";
  return failed ? kExitRefuted : kExitOk;
}

int cmd_graph(const Options& opt) {
  if (opt.paths.size() != 1 || !fs::is_directory(opt.paths[0]))
    throw ParseError("graph needs a corpus directory with a manifest");
  ModuleStore store = load_corpus(opt.paths[0]);
  auto manifest = read_manifest(opt.paths[0] + "/manifest");
  DevGraph g = build_graph(store, manifest.at("nodes"),
                           manifest.count("implicit")
                               ? manifest.at("implicit")
                               : std::vector<std::string>{});
  if (opt.emit == "dot") {
    std::cout << to_dot(g);
  } else if (opt.emit == "json") {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (const DevGraph::Node& n : g.nodes)
      j["nodes"].push_back({{"name", n.name}, {"theory", n.theory}});
    j["edges"] = ordered_json::array();
    for (const DevGraph::Edge& e : g.edges)
      j["edges"].push_back({{"src", e.src},
                            {"tgt", e.tgt},
                            {"label", e.label},
                            {"inclusion", e.inclusion}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    for (const DevGraph::Edge& e : g.edges)
      std::cout << "  " << e.src << (e.inclusion ? " >-> " : " --> ") << e.tgt
                << (e.label.empty() ? "" : "  [" + e.label + "]") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// fmt: canonical reflow of a module file.  The output is a function of
// the token sequence alone, so formatting is idempotent; comments are
// not preserved.

bool no_space_before(const Token& t) {
  return t.kind == Token::Kind::Sym &&
         (t.text == ";" || t.text == "," || t.text == ")" || t.text == "]" ||
          t.text == "." || t.text == "@[");
}

bool no_space_after(const Token& t) {
  return t.kind == Token::Kind::Sym &&
         (t.text == "(" || t.text == "[" || t.text == "@[" || t.text == "\\");
}

bool opens_declaration(const Token& t) {
  return t.kind == Token::Kind::Word &&
         (t.text == "theory" || t.text == "development" ||
          t.text == "translation" || t.text == "transport");
}

std::string format_module_text(const std::string& text) {
  std::vector<Token> toks = lex(text);
  std::ostringstream out;
  // declaration bodies are the only braces at nesting level zero; every
  // brace inside a body is a set former and stays inline
  std::vector<bool> brace_is_block;
  int depth = 0;
  bool at_line_start = true, first_decl = true, prev_glue = false;
  for (const Token& t : toks) {
    if (t.kind == Token::Kind::End) break;
    bool block_open = false, block_close = false, set_brace = false;
    if (t.text == "{" && t.kind == Token::Kind::Sym) {
      block_open = brace_is_block.empty();
      set_brace = !block_open;
      brace_is_block.push_back(block_open);
    } else if (t.text == "}" && t.kind == Token::Kind::Sym) {
      block_close = !brace_is_block.empty() && brace_is_block.back();
      set_brace = !block_close;
      if (!brace_is_block.empty()) brace_is_block.pop_back();
    }
    if (block_close) depth--;
    if (at_line_start) {
      if (depth == 0 && opens_declaration(t)) {
        if (!first_decl) out << "\n";
        first_decl = false;
      }
      for (int i = 0; i < depth; ++i) out << "  ";
    } else if (!prev_glue && !no_space_before(t) && !(set_brace && t.text == "}")) {
      out << " ";
    }
    if (t.kind == Token::Kind::Str) {
      out << '"' << t.text << '"';
    } else {
      out << t.text;
    }
    at_line_start = false;
    prev_glue = no_space_after(t) || (set_brace && t.text == "{");
    if (block_open || block_close || t.text == ";") {
      out << "\n";
      at_line_start = true;
      prev_glue = false;
    }
    if (block_open) depth++;
  }
  return out.str();
}

int cmd_fmt(const Options& opt) {
  for (const std::string& p : opt.paths) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot read " + p);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string formatted = format_module_text(buf.str());
    if (opt.write) {
      std::ofstream outf(p);
      outf << formatted;
    } else {
      std::cout << formatted;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alonzo: a toolkit for a simple type theory with undefined "
               "expressions, its finite-model oracle, and its little-theories "
               "module calculus"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--emit", opt.emit, "output format: text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--jobs", opt.jobs,
                 "worker threads (default: available parallelism)");

  CLI::App* check = app.add_subcommand("check", "finite-check theorems");
  check->add_option("paths", opt.paths)->required();
  check->add_option("--sizes", opt.sizes,
                    "base sizes: M=2,S=1 or N or LO..HI (all bases)");
  check->add_option("--dev", opt.dev, "only this development");
  check->add_option("--thm", opt.thm, "only this theorem label");

  CLI::App* models = app.add_subcommand("models", "enumerate standard models");
  models->add_option("paths", opt.paths)->required();
  models->add_option("--theory", opt.theory)->required();
  models->add_option("--sizes,--size", opt.sizes, "base sizes (default 2)");

  CLI::App* obligations =
      app.add_subcommand("obligations", "morphism obligations of a translation");
  obligations->add_option("name", opt.name)->required();
  obligations->add_option("paths", opt.paths)->required();

  CLI::App* transport =
      app.add_subcommand("transport", "replay transports and their expects");
  transport->add_option("paths", opt.paths)->required();
  transport->add_option("--name", opt.name, "only this transport");

  CLI::App* graph = app.add_subcommand("graph", "export the development graph");
  graph->add_option("paths", opt.paths)->required();

  CLI::App* fmt = app.add_subcommand("fmt", "canonical formatting");
  fmt->add_option("paths", opt.paths)->required();
  fmt->add_flag("--write", opt.write, "rewrite files in place");

  // accept the shared --emit/--jobs options after a subcommand too
  for (CLI::App* sub : {check, models, obligations, transport, graph, fmt})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (opt.jobs > 0) {
#ifdef _OPENMP
    omp_set_num_threads(opt.jobs);
#endif
  }
  bool parallel = opt.jobs != 1;

  try {
    if (check->parsed()) return cmd_check(opt, parallel);
    if (models->parsed()) return cmd_models(opt, parallel);
    if (obligations->parsed()) return cmd_obligations(opt, parallel);
    if (transport->parsed()) return cmd_transport(opt);
    if (graph->parsed()) return cmd_graph(opt);
    if (fmt->parsed()) return cmd_fmt(opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
