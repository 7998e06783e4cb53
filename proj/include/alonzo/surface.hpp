#ifndef ALONZO_SURFACE_HPP
#define ALONZO_SURFACE_HPP

#include <memory>
#include <string>
#include <vector>

#include "alonzo/builders.hpp"

// Surface syntax: tokens, a parse tree, elaboration into kernel syntax,
// and the canonical formatter.
namespace alonzo {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Token {
  enum class Kind { Word, Sym, Str, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
};

// Tokenize surface text.  `--` starts a line comment.  Words may contain
// `-` when followed by an alphanumeric (so MON-HOM is one word but
// `A -> B` is three tokens); symbol tokens starting with one of
// `*+<>=^%&` extend with alphanumerics and further such symbols (so
// `*op`, `**`, `<=R`, `=>`, `<=>` are single tokens).
std::vector<Token> lex(const std::string& text);

// ---------------------------------------------------------------------
// parse tree

struct SNode;
using SPtr = std::shared_ptr<SNode>;

struct SBinder {
  std::vector<std::string> names;
  SPtr domain;  // a Dom* node
};

struct SNode {
  enum class Kind {
    // terms
    Id,        // text
    Call,      // text = builtin name; kids = arguments (terms or domains)
    Annot,     // text = builtin name; kids = domain arguments from @[...]
    App,       // kids = {f, x}
    EqChain,   // kids = operands (>= 2)
    QuasiEq,   // kids = {a, b}
    In,        // kids = {a, s}
    Infix,     // text = operator; kids = {a, b}
    Restrict,  // kids = {f, s}
    IsDef,     // kids = {a}
    IsDefIn,   // kids = {a, q}
    Not,       // kids = {a}
    And, Or, Implies, Iff,  // kids = {a, b}
    Lam, Iota, Forall, Exists,  // binders + kids = {body}
    If,        // kids = {c, a, b}
    Pair,      // kids = {a, b}
    FinSet,    // kids = elements
    SetBuilder,  // binders (single) + kids = {pred}
    // domains
    DomBool,   // the type o
    DomName,   // text: resolved to a base type or a term at elaboration
    DomSet,    // kids = {elem}
    DomFun,    // kids = {dom, cod}
    DomProd,   // kids = {a, b}
    DomTerm,   // kids = {term}: an explicitly term-valued domain
  };
  Kind kind;
  std::string text;
  std::vector<SPtr> kids;
  std::vector<SBinder> binders;
  int line = 0;
};

SPtr snode(SNode::Kind k, std::string text = "", std::vector<SPtr> kids = {});

// A token cursor shared by the term parser and the module parser.
struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  explicit Parser(const std::string& text) : toks(lex(text)) {}

  const Token& peek(size_t ahead = 0) const;
  Token next();
  bool at_word(const std::string& w) const;
  bool at_sym(const std::string& s) const;
  bool eat_word(const std::string& w);
  bool eat_sym(const std::string& s);
  void expect_word(const std::string& w);
  void expect_sym(const std::string& s);
  [[noreturn]] void fail(const std::string& msg) const;

  SPtr parse_term();    // full expression
  SPtr parse_domain();  // type-or-quasitype expression
};

// Convenience wrappers that parse a complete string.
SPtr parse_term(const std::string& text);
SPtr parse_domain(const std::string& text);

// ---------------------------------------------------------------------
// elaboration

// The carrier of an elaborated domain: a plain type, or a quasitype (a
// set-typed expression) together with its underlying type.
struct Carrier {
  TypePtr ty;            // underlying type (element type of the quasitype)
  ExprPtr qty;           // null for a plain type
  bool is_plain() const { return qty == nullptr; }
};

struct ElabContext {
  const Language* language = nullptr;
  // innermost-last local binders
  std::vector<std::pair<std::string, TypePtr>> scope;

  const TypePtr* lookup_var(const std::string& n) const;
};

ExprPtr elaborate(const SPtr& n, ElabContext& ctx);
Carrier elaborate_domain(const SPtr& n, ElabContext& ctx);

ExprPtr elaborate_term(const std::string& text, const Language& L);
TypePtr elaborate_type(const std::string& text, const Language& L);

// ---------------------------------------------------------------------
// formatting (canonical surface rendering; parse(fmt(e)) is alpha-
// equivalent to e, and fmt is idempotent)
std::string fmt_expr(const ExprPtr& e);
std::string fmt_type(const TypePtr& t);

}  // namespace alonzo

#endif
