#include <set>
#include <unordered_map>

#include "alonzo/surface.hpp"

namespace alonzo {

SPtr snode(SNode::Kind k, std::string text, std::vector<SPtr> kids) {
  auto n = std::make_shared<SNode>();
  n->kind = k;
  n->text = std::move(text);
  n->kids = std::move(kids);
  return n;
}

const Token& Parser::peek(size_t ahead) const {
  size_t i = pos + ahead;
  return i < toks.size() ? toks[i] : toks.back();
}

Token Parser::next() {
  Token t = peek();
  if (pos < toks.size() - 1) ++pos;
  return t;
}

bool Parser::at_word(const std::string& w) const {
  return peek().kind == Token::Kind::Word && peek().text == w;
}

bool Parser::at_sym(const std::string& s) const {
  return peek().kind == Token::Kind::Sym && peek().text == s;
}

bool Parser::eat_word(const std::string& w) {
  if (!at_word(w)) return false;
  next();
  return true;
}

bool Parser::eat_sym(const std::string& s) {
  if (!at_sym(s)) return false;
  next();
  return true;
}

void Parser::expect_word(const std::string& w) {
  if (!eat_word(w)) fail("expected '" + w + "'");
}

void Parser::expect_sym(const std::string& s) {
  if (!eat_sym(s)) fail("expected '" + s + "'");
}

void Parser::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError("line " + std::to_string(t.line) + ": " + msg + " (got " +
                   got + ")");
}

namespace {

// Words that terminate a term rather than starting an atom.
const std::set<std::string>& stop_words() {
  static const std::set<std::string> s = {
      "then", "else",  "in",          "if",        "forall",  "exists",
      "I",    "theory", "development", "translation", "transport", "extends",
      "of",   "base",  "const",       "axiom",     "def",     "thm",
      "by",   "item",  "as",          "expect",    "via",     "from",
      "to",   "yields", "morphism",   "using",     "include", "caption"};
  return s;
}

struct BuiltinSpec {
  enum class Arg { Term, Domain };
  bool annot = false;  // arguments come from @[...] instead of (...)
  Arg arg = Arg::Term;
  int arity = 0;
};

const std::unordered_map<std::string, BuiltinSpec>& builtins() {
  using A = BuiltinSpec::Arg;
  static const std::unordered_map<std::string, BuiltinSpec> b = {
      {"UnivSet", {true, A::Domain, 1}},  {"EmpSet", {true, A::Domain, 1}},
      {"Bot", {true, A::Domain, 1}},      {"Id", {true, A::Domain, 1}},
      {"EmpFun", {true, A::Domain, 2}},   {"FunCompPair", {true, A::Domain, 3}},
      {"FunAppPair", {true, A::Domain, 2}},
      {"nil", {true, A::Domain, 1}},      {"lists", {true, A::Domain, 1}},
      {"seq", {true, A::Domain, 1}},      {"append", {true, A::Domain, 1}},
      {"Fst", {false, A::Term, 1}},       {"Snd", {false, A::Term, 1}},
      {"TOTAL", {false, A::Term, 1}},     {"set-op", {false, A::Term, 1}},
      {"cons", {false, A::Term, 2}},      {"MONOID", {false, A::Term, 3}},
      {"COM-MONOID", {false, A::Term, 3}},
      {"MON-ACTION", {false, A::Term, 5}},
      {"MON-HOMOM", {false, A::Term, 7}},
      {"FunQ", {false, A::Domain, 2}},    {"ProdQ", {false, A::Domain, 2}},
      {"SetQ", {false, A::Domain, 1}},
  };
  return b;
}

// Symbols with a fixed structural meaning; anything else is a user infix
// operator (a constant or variable applied in infix position).
const std::set<std::string>& structural_syms() {
  static const std::set<std::string> s = {
      "(", ")", "{", "}",  "[",  "]",  ",",  ".",  ":",   "|", "\\",
      "~", "!", ";", "->", ":=", "/\\", "\\/", "~=", "@[", "=", "=>", "<=>"};
  return s;
}

bool at_user_op(const Parser& p) {
  const Token& t = p.peek();
  return t.kind == Token::Kind::Sym && structural_syms().count(t.text) == 0;
}

bool at_atom_start(const Parser& p) {
  const Token& t = p.peek();
  if (t.kind == Token::Kind::Sym) return t.text == "(" || t.text == "{";
  if (t.kind == Token::Kind::Word) return stop_words().count(t.text) == 0;
  return false;
}

SPtr parse_atom(Parser& p);

std::vector<SBinder> parse_binder_group(Parser& p) {
  SBinder b;
  b.names.push_back(p.next().text);
  while (p.eat_sym(",")) {
    if (p.peek().kind != Token::Kind::Word) p.fail("expected bound variable");
    b.names.push_back(p.next().text);
  }
  p.expect_sym(":");
  b.domain = p.parse_domain();
  return {b};
}

SPtr parse_binder(Parser& p, SNode::Kind kind) {
  int line = p.peek().line;
  auto binders = parse_binder_group(p);
  p.expect_sym(".");
  SPtr body = p.parse_term();
  auto n = snode(kind, "", {body});
  n->binders = std::move(binders);
  n->line = line;
  return n;
}

SPtr parse_postfix(Parser& p) {
  SPtr e = parse_atom(p);
  for (;;) {
    if (p.eat_sym("!")) {
      if (at_atom_start(p))
        e = snode(SNode::Kind::IsDefIn, "", {e, parse_atom(p)});
      else
        e = snode(SNode::Kind::IsDef, "", {e});
    } else if (p.eat_sym("|")) {
      e = snode(SNode::Kind::Restrict, "", {e, parse_atom(p)});
    } else if (at_atom_start(p)) {
      e = snode(SNode::Kind::App, "", {e, parse_atom(p)});
    } else {
      return e;
    }
  }
}

SPtr parse_infix_level(Parser& p) {
  SPtr e = parse_postfix(p);
  if (!at_user_op(p)) return e;
  std::string op = p.peek().text;
  while (p.eat_sym(op)) e = snode(SNode::Kind::Infix, op, {e, parse_postfix(p)});
  if (at_user_op(p))
    p.fail("mixed infix operators '" + op + "' and '" + p.peek().text +
           "' need parentheses");
  return e;
}

SPtr parse_rel_level(Parser& p) {
  SPtr e = parse_infix_level(p);
  if (p.at_sym("=")) {
    std::vector<SPtr> ops = {e};
    while (p.eat_sym("=")) ops.push_back(parse_infix_level(p));
    if (p.at_sym("~=") || p.at_word("in"))
      p.fail("mixed relational operators need parentheses");
    return snode(SNode::Kind::EqChain, "", std::move(ops));
  }
  if (p.eat_sym("~=")) {
    SPtr r = parse_infix_level(p);
    if (p.at_sym("=") || p.at_sym("~=") || p.at_word("in"))
      p.fail("relational operators do not chain; use parentheses");
    return snode(SNode::Kind::QuasiEq, "", {e, r});
  }
  if (p.eat_word("in")) {
    SPtr r = parse_infix_level(p);
    if (p.at_sym("=") || p.at_sym("~=") || p.at_word("in"))
      p.fail("relational operators do not chain; use parentheses");
    return snode(SNode::Kind::In, "", {e, r});
  }
  return e;
}

SPtr parse_not_level(Parser& p) {
  // binders and `if` are allowed as operands of the logical connectives
  // and extend maximally to the right
  if (p.at_sym("\\") || p.at_word("I") || p.at_word("forall") ||
      p.at_word("exists") || p.at_word("if"))
    return p.parse_term();
  if (p.eat_sym("~")) return snode(SNode::Kind::Not, "", {parse_not_level(p)});
  return parse_rel_level(p);
}

SPtr parse_and_level(Parser& p) {
  SPtr e = parse_not_level(p);
  if (p.eat_sym("/\\"))
    return snode(SNode::Kind::And, "", {e, parse_and_level(p)});
  return e;
}

SPtr parse_or_level(Parser& p) {
  SPtr e = parse_and_level(p);
  if (p.eat_sym("\\/"))
    return snode(SNode::Kind::Or, "", {e, parse_or_level(p)});
  return e;
}

SPtr parse_implies_level(Parser& p) {
  SPtr e = parse_or_level(p);
  if (p.eat_sym("=>"))
    return snode(SNode::Kind::Implies, "", {e, parse_implies_level(p)});
  return e;
}

SPtr parse_iff_level(Parser& p) {
  SPtr e = parse_implies_level(p);
  if (p.eat_sym("<=>"))
    return snode(SNode::Kind::Iff, "", {e, parse_implies_level(p)});
  return e;
}

std::vector<SPtr> parse_domain_list(Parser& p, const std::string& close) {
  std::vector<SPtr> doms;
  doms.push_back(p.parse_domain());
  while (p.eat_sym(",")) doms.push_back(p.parse_domain());
  p.expect_sym(close);
  return doms;
}

SPtr parse_atom(Parser& p) {
  int line = p.peek().line;
  if (p.eat_sym("(")) {
    // parenthesized term, or a tuple nesting to the right
    std::vector<SPtr> items = {p.parse_term()};
    while (p.eat_sym(",")) items.push_back(p.parse_term());
    p.expect_sym(")");
    for (size_t i = items.size() - 1; i-- > 0;)
      items[i] = snode(SNode::Kind::Pair, "", {items[i], items[i + 1]});
    return items[0];
  }
  if (p.eat_sym("{")) {
    if (p.peek().kind == Token::Kind::Word && p.peek(1).kind == Token::Kind::Sym &&
        p.peek(1).text == ":") {
      SBinder b;
      b.names.push_back(p.next().text);
      p.expect_sym(":");
      b.domain = p.parse_domain();
      p.expect_sym("|");
      SPtr pred = p.parse_term();
      p.expect_sym("}");
      auto n = snode(SNode::Kind::SetBuilder, "", {pred});
      n->binders = {b};
      n->line = line;
      return n;
    }
    std::vector<SPtr> elems;
    elems.push_back(p.parse_term());
    while (p.eat_sym(",")) elems.push_back(p.parse_term());
    p.expect_sym("}");
    auto n = snode(SNode::Kind::FinSet, "", std::move(elems));
    n->line = line;
    return n;
  }
  if (at_user_op(p)) {
    // a symbolic constant in non-infix position, e.g. set-op(*)
    auto n = snode(SNode::Kind::Id, p.next().text);
    n->line = line;
    return n;
  }
  if (p.peek().kind != Token::Kind::Word || stop_words().count(p.peek().text))
    p.fail("expected a term");
  std::string w = p.next().text;
  auto it = builtins().find(w);
  if (it == builtins().end()) {
    auto n = snode(SNode::Kind::Id, w);
    n->line = line;
    return n;
  }
  const BuiltinSpec& spec = it->second;
  std::vector<SPtr> args;
  if (spec.annot) {
    p.expect_sym("@[");
    args = parse_domain_list(p, "]");
  } else {
    p.expect_sym("(");
    if (spec.arg == BuiltinSpec::Arg::Domain) {
      args = parse_domain_list(p, ")");
    } else {
      args.push_back(p.parse_term());
      while (p.eat_sym(",")) args.push_back(p.parse_term());
      p.expect_sym(")");
    }
  }
  if (static_cast<int>(args.size()) != spec.arity)
    p.fail(w + " takes " + std::to_string(spec.arity) + " argument(s)");
  auto n = snode(spec.annot ? SNode::Kind::Annot : SNode::Kind::Call, w,
                 std::move(args));
  n->line = line;
  return n;
}

SPtr parse_dom_atom(Parser& p) {
  int line = p.peek().line;
  if (p.eat_word("o")) {
    auto n = snode(SNode::Kind::DomBool);
    n->line = line;
    return n;
  }
  if (p.eat_sym("{")) {
    SPtr inner = p.parse_domain();
    p.expect_sym("}");
    auto n = snode(SNode::Kind::DomSet, "", {inner});
    n->line = line;
    return n;
  }
  if (p.eat_sym("(")) {
    SPtr inner = p.parse_domain();
    p.expect_sym(")");
    return inner;
  }
  if (p.peek().kind != Token::Kind::Word || stop_words().count(p.peek().text))
    p.fail("expected a type or quasitype");
  if (builtins().count(p.peek().text)) {
    auto n = snode(SNode::Kind::DomTerm, "", {parse_atom(p)});
    n->line = line;
    return n;
  }
  auto n = snode(SNode::Kind::DomName, p.next().text);
  n->line = line;
  return n;
}

}  // namespace

SPtr Parser::parse_term() {
  int line = peek().line;
  if (eat_sym("\\")) {
    auto n = parse_binder(*this, SNode::Kind::Lam);
    n->line = line;
    return n;
  }
  if (eat_word("I")) return parse_binder(*this, SNode::Kind::Iota);
  if (eat_word("forall")) return parse_binder(*this, SNode::Kind::Forall);
  if (eat_word("exists")) return parse_binder(*this, SNode::Kind::Exists);
  if (eat_word("if")) {
    SPtr c = parse_term();
    expect_word("then");
    SPtr a = parse_term();
    expect_word("else");
    SPtr b = parse_term();
    auto n = snode(SNode::Kind::If, "", {c, a, b});
    n->line = line;
    return n;
  }
  return parse_iff_level(*this);
}

SPtr Parser::parse_domain() {
  SPtr a = parse_dom_atom(*this);
  std::vector<SPtr> factors = {a};
  while (at_sym("*") && peek().text == "*") {
    next();
    factors.push_back(parse_dom_atom(*this));
  }
  for (size_t i = factors.size() - 1; i-- > 0;)
    factors[i] = snode(SNode::Kind::DomProd, "", {factors[i], factors[i + 1]});
  SPtr prod = factors[0];
  if (eat_sym("->"))
    return snode(SNode::Kind::DomFun, "", {prod, parse_domain()});
  return prod;
}

SPtr parse_term(const std::string& text) {
  Parser p(text);
  SPtr e = p.parse_term();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input after term");
  return e;
}

SPtr parse_domain(const std::string& text) {
  Parser p(text);
  SPtr e = p.parse_domain();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input after type");
  return e;
}

}  // namespace alonzo
