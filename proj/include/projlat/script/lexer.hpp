#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "projlat/error.hpp"

namespace projlat::script {

/// Grammar violation, carrying a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class TokenKind { Word, Identifier, Integer, Rational, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of line";
    case TokenKind::Integer:
    case TokenKind::Rational:
      return "number '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

/// Splits one statement line into tokens. The first token is a command word
/// (`[a-zA-Z][a-zA-Z0-9_-]*` with an optional trailing `?`); the rest use the
/// expression lexicon. A `p/q` literal is one token only when written without
/// spaces. Everything after `#` is a comment.
inline std::vector<Token> tokenize_line(const std::string& text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };

  while (i < n) {
    const char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (out.empty()) {
      if (!is_ident_start(c)) throw SyntaxError(line, col(i), "expected a statement keyword");
      while (i < n && (is_ident_char(text[i]) || text[i] == '-')) ++i;
      if (i < n && text[i] == '?') ++i;
      out.push_back({TokenKind::Word, text.substr(start, i - start), line, col(start)});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < n && is_ident_char(text[i])) ++i;
      out.push_back({TokenKind::Identifier, text.substr(start, i - start), line, col(start)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i + 1 < n && text[i] == '/' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({TokenKind::Rational, text.substr(start, i - start), line, col(start)});
      } else {
        out.push_back({TokenKind::Integer, text.substr(start, i - start), line, col(start)});
      }
      continue;
    }
    if (c == '.' && i + 1 < n && text[i + 1] == '.') {
      i += 2;
      out.push_back({TokenKind::Symbol, "..", line, col(start)});
      continue;
    }
    static const std::string symbols = "=,[]{}():;+-*^/|";
    if (symbols.find(c) != std::string::npos) {
      ++i;
      out.push_back({TokenKind::Symbol, std::string(1, c), line, col(start)});
      continue;
    }
    throw SyntaxError(line, col(i), std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokenKind::End, "", line, col(std::min(i, n))});
  return out;
}

/// Tokenizes a bare expression (no leading command word).
inline std::vector<Token> tokenize_expression(const std::string& text, int line = 1) {
  auto toks = tokenize_line("expr " + text, line);
  toks.erase(toks.begin());
  for (auto& t : toks) t.column -= 5;
  return toks;
}

}  // namespace projlat::script
