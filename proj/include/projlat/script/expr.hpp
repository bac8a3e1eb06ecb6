#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "projlat/polynomial.hpp"
#include "projlat/script/lexer.hpp"

namespace projlat::script {

/// Polynomial expression tree, independent of any ring.
struct Expr {
  enum class Kind { Number, Name, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Number;
  std::string text;  // literal digits ("3", "2/3") or identifier
  int exponent = 0;  // Pow only
  std::vector<Expr> args;

  static Expr number(std::string t) { return Expr{Kind::Number, std::move(t), 0, {}}; }
  static Expr name(std::string t) { return Expr{Kind::Name, std::move(t), 0, {}}; }
  static Expr binary(Kind k, Expr a, Expr b) { return Expr{k, {}, 0, {std::move(a), std::move(b)}}; }
  static Expr neg(Expr a) { return Expr{Kind::Neg, {}, 0, {std::move(a)}}; }
  static Expr pow(Expr a, int e) { return Expr{Kind::Pow, {}, e, {std::move(a)}}; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Fully parenthesized rendering; reparses to an equal tree.
inline std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::Add:
      return "(" + render(e.args[0]) + " + " + render(e.args[1]) + ")";
    case Expr::Kind::Sub:
      return "(" + render(e.args[0]) + " - " + render(e.args[1]) + ")";
    case Expr::Kind::Mul:
      return "(" + render(e.args[0]) + "*" + render(e.args[1]) + ")";
    case Expr::Kind::Neg:
      return "(-" + render(e.args[0]) + ")";
    case Expr::Kind::Pow: {
      const auto& base = e.args[0];
      const bool atomic = base.kind == Expr::Kind::Number || base.kind == Expr::Kind::Name;
      return (atomic ? render(base) : "(" + render(base) + ")") + "^" + std::to_string(e.exponent);
    }
  }
  return {};
}

/// Cursor over the tokens of one line.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool is_symbol(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool is_identifier(const std::string& s) const {
    return peek().kind == TokenKind::Identifier && peek().text == s;
  }
  bool accept_symbol(const std::string& s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail({"'" + s + "'"});
  }
  void expect_identifier(const std::string& s) {
    if (!is_identifier(s)) fail({"'" + s + "'"});
    next();
  }
  std::string expect_name() {
    if (peek().kind != TokenKind::Identifier) fail({"identifier"});
    return next().text;
  }
  long long expect_integer() {
    bool negative = accept_symbol("-");
    if (peek().kind != TokenKind::Integer) fail({"integer"});
    const std::string digits = next().text;
    if (digits.size() > 9) fail({"integer of at most 9 digits"});
    long long v = std::stoll(digits);
    return negative ? -v : v;
  }
  void expect_end() {
    if (!at_end()) fail({"end of line"});
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += "; found " + describe(peek());
    throw SyntaxError(peek().line, peek().column, msg);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

namespace detail {

inline Expr parse_sum(TokenStream& ts);

inline Expr parse_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == TokenKind::Integer || t.kind == TokenKind::Rational) return Expr::number(ts.next().text);
  if (t.kind == TokenKind::Identifier) return Expr::name(ts.next().text);
  if (ts.accept_symbol("(")) {
    Expr e = parse_sum(ts);
    ts.expect_symbol(")");
    return e;
  }
  ts.fail({"number", "identifier", "'('"});
}

inline Expr parse_power(TokenStream& ts) {
  Expr base = parse_atom(ts);
  if (ts.accept_symbol("^")) {
    if (ts.peek().kind != TokenKind::Integer) ts.fail({"non-negative integer exponent"});
    const std::string digits = ts.next().text;
    if (digits.size() > 6) ts.fail({"exponent below 10^6"});
    return Expr::pow(std::move(base), std::stoi(digits));
  }
  return base;
}

inline Expr parse_unary(TokenStream& ts) {
  if (ts.accept_symbol("-")) return Expr::neg(parse_unary(ts));
  return parse_power(ts);
}

inline Expr parse_product(TokenStream& ts) {
  Expr e = parse_unary(ts);
  while (ts.accept_symbol("*")) e = Expr::binary(Expr::Kind::Mul, std::move(e), parse_unary(ts));
  return e;
}

inline Expr parse_sum(TokenStream& ts) {
  Expr e = parse_product(ts);
  for (;;) {
    if (ts.accept_symbol("+")) {
      e = Expr::binary(Expr::Kind::Add, std::move(e), parse_product(ts));
    } else if (ts.accept_symbol("-")) {
      e = Expr::binary(Expr::Kind::Sub, std::move(e), parse_product(ts));
    } else {
      return e;
    }
  }
}

}  // namespace detail

inline Expr parse_expr(TokenStream& ts) { return detail::parse_sum(ts); }

/// Looks up identifiers that are not ring variables.
template <Field K>
using NameResolver = std::function<std::optional<Polynomial<K>>(const std::string&)>;

template <Field K>
Polynomial<K> evaluate(const Expr& e, const RingPtr<K>& ring, const NameResolver<K>& resolve = {}) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      const auto slash = e.text.find('/');
      const auto value = slash == std::string::npos
                             ? ring->field().from_fraction(e.text, "1")
                             : ring->field().from_fraction(e.text.substr(0, slash), e.text.substr(slash + 1));
      return Polynomial<K>::constant(ring, value);
    }
    case Expr::Kind::Name: {
      const int idx = ring->variable_index(e.text);
      if (idx >= 0) return Polynomial<K>::variable(ring, static_cast<std::size_t>(idx));
      if (resolve) {
        if (auto p = resolve(e.text)) return *p;
      }
      throw ValidationError("unknown identifier '" + e.text + "'");
    }
    case Expr::Kind::Add:
      return evaluate(e.args[0], ring, resolve) + evaluate(e.args[1], ring, resolve);
    case Expr::Kind::Sub:
      return evaluate(e.args[0], ring, resolve) - evaluate(e.args[1], ring, resolve);
    case Expr::Kind::Mul:
      return evaluate(e.args[0], ring, resolve) * evaluate(e.args[1], ring, resolve);
    case Expr::Kind::Neg:
      return -evaluate(e.args[0], ring, resolve);
    case Expr::Kind::Pow:
      return evaluate(e.args[0], ring, resolve).pow(static_cast<unsigned>(e.exponent));
  }
  throw StructuralError("corrupt expression tree");
}

}  // namespace projlat::script

namespace projlat {

/// Parses a polynomial written in the script syntax, e.g. "x^2 - 2/3*y*z".
template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, const std::string& text) {
  script::TokenStream ts(script::tokenize_expression(text));
  script::Expr e = script::parse_expr(ts);
  ts.expect_end();
  return script::evaluate(e, ring);
}

}  // namespace projlat
