#include <cctype>

#include "alonzo/surface.hpp"

namespace alonzo {

namespace {

bool word_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool word_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
// symbol tokens starting with one of these extend with alphanumerics
bool ext_sym(char c) {
  return c == '*' || c == '+' || c == '<' || c == '>' || c == '=' ||
         c == '^' || c == '%' || c == '&';
}

}  // namespace

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0, n = text.size();
  auto push = [&](Token::Kind k, std::string t) {
    out.push_back(Token{k, std::move(t), line});
  };
  while (i < n) {
    char c = text[i];
    if (c == '\n') { ++line; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '-' && i + 1 < n && text[i + 1] == '-') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      while (j < n && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= n || text[j] != '"')
        throw ParseError("line " + std::to_string(line) +
                         ": unterminated string literal");
      push(Token::Kind::Str, text.substr(i + 1, j - i - 1));
      i = j + 1;
      continue;
    }
    if (word_start(c)) {
      size_t j = i + 1;
      while (j < n) {
        if (word_cont(text[j])) { ++j; continue; }
        // a hyphen stays inside the word when followed by a word char
        if (text[j] == '-' && j + 1 < n && word_cont(text[j + 1])) { j += 2; continue; }
        break;
      }
      push(Token::Kind::Word, text.substr(i, j - i));
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      push(Token::Kind::Sym, "->"); i += 2; continue;
    }
    if (c == ':' && i + 1 < n && text[i + 1] == '=') {
      push(Token::Kind::Sym, ":="); i += 2; continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '\\') {
      push(Token::Kind::Sym, "/\\"); i += 2; continue;
    }
    if (c == '\\' && i + 1 < n && text[i + 1] == '/') {
      push(Token::Kind::Sym, "\\/"); i += 2; continue;
    }
    if (c == '~' && i + 1 < n && text[i + 1] == '=') {
      push(Token::Kind::Sym, "~="); i += 2; continue;
    }
    if (c == '@' && i + 1 < n && text[i + 1] == '[') {
      push(Token::Kind::Sym, "@["); i += 2; continue;
    }
    if (ext_sym(c)) {
      size_t j = i + 1;
      while (j < n && (ext_sym(text[j]) ||
                       std::isalnum(static_cast<unsigned char>(text[j]))))
        ++j;
      push(Token::Kind::Sym, text.substr(i, j - i));
      i = j;
      continue;
    }
    switch (c) {
      case '(': case ')': case '{': case '}': case '[': case ']':
      case ',': case '.': case ':': case '|': case '\\': case '~':
      case '!': case '@': case ';':
        push(Token::Kind::Sym, std::string(1, c));
        ++i;
        continue;
      default:
        throw ParseError("line " + std::to_string(line) +
                         ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  push(Token::Kind::End, "");
  return out;
}

}  // namespace alonzo
