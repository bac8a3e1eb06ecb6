#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "projlat/script/ast.hpp"

namespace projlat::script {

/// Argument kinds a command may take.
enum class Param { Poly, Ideal, OptIdeal, Module, Locus, Name, Range, Count };

/// Command signatures. `Count` parses `n=<int>`.
inline const std::map<std::string, std::vector<Param>>& command_signatures() {
  static const std::map<std::string, std::vector<Param>> table = {
      {"sat", {Param::Ideal, Param::OptIdeal}},
      {"gb", {Param::Ideal}},
      {"in?", {Param::Poly, Param::Ideal}},
      {"radical?", {Param::Poly, Param::Ideal}},
      {"ann", {Param::Module}},
      {"torsion?", {Param::Module}},
      {"torsion", {Param::Module}},
      {"supp", {Param::Module}},
      {"hilbert", {Param::Module, Param::Range}},
      {"subset?", {Param::Locus, Param::Locus}},
      {"empty?", {Param::Locus}},
      {"member?", {Param::Module, Param::Name}},
      {"prime-member?", {Param::Module, Param::Ideal}},
      {"roundtrip", {Param::Locus}},
      {"sections", {Param::Poly}},
      {"restrict", {Param::Name, Param::Poly}},
      {"eq?", {Param::Name, Param::Name}},
      {"germ-eq?", {Param::Name, Param::Name, Param::Ideal}},
      {"finite-verify", {Param::Count}},
      {"print", {Param::Name}},
      {"use", {Param::Name}},
  };
  return table;
}

namespace detail {

inline bool is_call(const TokenStream& ts, const char* word) {
  return ts.is_identifier(word) && ts.is_symbol("(", 1);
}

inline std::vector<Expr> parse_expr_list(TokenStream& ts) {
  std::vector<Expr> out{parse_expr(ts)};
  while (ts.accept_symbol(",")) out.push_back(parse_expr(ts));
  return out;
}

inline std::vector<long long> parse_int_list(TokenStream& ts) {
  std::vector<long long> out;
  ts.expect_symbol("[");
  if (ts.accept_symbol("]")) return out;
  out.push_back(ts.expect_integer());
  while (ts.accept_symbol(",")) out.push_back(ts.expect_integer());
  ts.expect_symbol("]");
  return out;
}

inline IdealRef parse_ideal_ref(TokenStream& ts) {
  IdealRef r;
  if (ts.accept_symbol("(")) {
    r.kind = IdealRef::Kind::Inline;
    r.polys = parse_expr_list(ts);
    ts.expect_symbol(")");
    return r;
  }
  if (ts.peek().kind != TokenKind::Identifier) ts.fail({"ideal name", "'('", "'irrelevant'"});
  r.name = ts.next().text;
  if (r.name == "irrelevant") {
    r.kind = IdealRef::Kind::Irrelevant;
    r.name.clear();
  }
  return r;
}

inline CokerSpec parse_coker_body(TokenStream& ts) {
  CokerSpec spec;
  ts.expect_symbol("{");
  ts.expect_identifier("shifts");
  ts.expect_symbol(":");
  spec.shifts = parse_int_list(ts);
  ts.expect_symbol(";");
  ts.expect_identifier("cols");
  ts.expect_symbol(":");
  ts.expect_symbol("[");
  if (!ts.accept_symbol("]")) {
    do {
      ts.expect_symbol("[");
      std::vector<Expr> col;
      if (!ts.is_symbol("]")) col = parse_expr_list(ts);
      ts.expect_symbol("]");
      spec.cols.push_back(std::move(col));
    } while (ts.accept_symbol(","));
    ts.expect_symbol("]");
  }
  if (ts.accept_symbol(";")) {
    ts.expect_identifier("colshifts");
    ts.expect_symbol(":");
    spec.colshifts = parse_int_list(ts);
  }
  ts.expect_symbol("}");
  return spec;
}

inline ModuleExpr parse_module(TokenStream& ts) {
  ModuleExpr m;
  if (ts.is_identifier("coker") && ts.is_symbol("{", 1)) {
    ts.next();
    m.kind = ModuleExpr::Kind::Coker;
    m.coker = parse_coker_body(ts);
    return m;
  }
  static const std::pair<const char*, ModuleExpr::Kind> binary[] = {{"tensor", ModuleExpr::Kind::Tensor},
                                                                    {"sum", ModuleExpr::Kind::Sum}};
  for (auto [word, kind] : binary) {
    if (!is_call(ts, word)) continue;
    ts.next();
    ts.next();
    m.kind = kind;
    m.args.push_back(parse_module(ts));
    ts.expect_symbol(",");
    m.args.push_back(parse_module(ts));
    ts.expect_symbol(")");
    return m;
  }
  static const std::pair<const char*, ModuleExpr::Kind> scalar[] = {{"shift", ModuleExpr::Kind::Shift},
                                                                    {"tail", ModuleExpr::Kind::Tail}};
  for (auto [word, kind] : scalar) {
    if (!is_call(ts, word)) continue;
    ts.next();
    ts.next();
    m.kind = kind;
    m.args.push_back(parse_module(ts));
    ts.expect_symbol(",");
    m.amount = ts.expect_integer();
    ts.expect_symbol(")");
    return m;
  }
  if (ts.peek().kind != TokenKind::Identifier) ts.fail({"module name", "'coker{'", "'tensor('", "'sum('"});
  m.name = ts.next().text;
  return m;
}

inline LocusTerm parse_locus_term(TokenStream& ts) {
  LocusTerm t;
  if (is_call(ts, "V")) {
    ts.next();
    ts.next();
    t.items = parse_expr_list(ts);
    ts.expect_symbol(")");
    return t;
  }
  if (ts.peek().kind != TokenKind::Identifier) ts.fail({"'V('", "locus name"});
  t.is_name = true;
  t.name = ts.next().text;
  return t;
}

inline LocusExpr parse_locus(TokenStream& ts) {
  LocusExpr l;
  l.terms.push_back(parse_locus_term(ts));
  while (ts.accept_symbol("|")) l.terms.push_back(parse_locus_term(ts));
  return l;
}

inline SerreExpr parse_serre(TokenStream& ts) {
  SerreExpr e;
  if (is_call(ts, "gen")) {
    ts.next();
    ts.next();
    e.kind = SerreExpr::Kind::Gen;
    if (!ts.is_symbol(")")) {
      e.modules.push_back(parse_module(ts));
      while (ts.accept_symbol(",")) e.modules.push_back(parse_module(ts));
    }
    ts.expect_symbol(")");
    return e;
  }
  for (auto [word, kind] : {std::pair{"join", SerreExpr::Kind::Join}, std::pair{"meet", SerreExpr::Kind::Meet}}) {
    if (!is_call(ts, word)) continue;
    ts.next();
    ts.next();
    e.kind = kind;
    e.args.push_back(parse_serre(ts));
    ts.expect_symbol(",");
    e.args.push_back(parse_serre(ts));
    ts.expect_symbol(")");
    return e;
  }
  if (ts.peek().kind != TokenKind::Identifier) ts.fail({"'gen('", "'join('", "'meet('", "'V('", "name"});
  auto locus = parse_locus(ts);
  if (locus.terms.size() == 1 && locus.terms[0].is_name) {
    e.name = locus.terms[0].name;
    return e;
  }
  e.kind = SerreExpr::Kind::Datum;
  e.locus = std::move(locus);
  return e;
}

inline RingDecl parse_ring_body(TokenStream& ts, RingDecl d) {
  if (ts.is_identifier("QQ")) {
    ts.next();
    d.field = "QQ";
  } else if (ts.is_identifier("GF")) {
    ts.next();
    d.field = "GF";
    ts.expect_symbol("(");
    d.modulus = ts.expect_integer();
    ts.expect_symbol(")");
  } else {
    ts.fail({"'QQ'", "'GF('"});
  }
  ts.expect_symbol("[");
  do {
    std::string v = ts.expect_name();
    long long w = 1;
    if (ts.accept_symbol(":")) w = ts.expect_integer();
    d.vars.emplace_back(std::move(v), w);
  } while (ts.accept_symbol(","));
  ts.expect_symbol("]");
  return d;
}

inline Arg parse_param(TokenStream& ts, Param p) {
  switch (p) {
    case Param::Poly:
      return parse_expr(ts);
    case Param::Ideal:
    case Param::OptIdeal:
      return parse_ideal_ref(ts);
    case Param::Module:
      return parse_module(ts);
    case Param::Locus:
      return parse_locus(ts);
    case Param::Name:
      return NameArg{ts.expect_name()};
    case Param::Range: {
      Range r;
      r.lo = ts.expect_integer();
      ts.expect_symbol("..");
      r.hi = ts.expect_integer();
      return r;
    }
    case Param::Count: {
      KeyValue kv;
      ts.expect_identifier("n");
      kv.key = "n";
      ts.expect_symbol("=");
      kv.value = ts.expect_integer();
      return kv;
    }
  }
  throw StructuralError("unknown parameter kind");
}

}  // namespace detail

/// Parses one line. Returns nothing for blank and comment-only lines.
inline std::optional<Statement> parse_statement(const std::string& text, int line = 1) {
  TokenStream ts(tokenize_line(text, line));
  if (ts.at_end()) return std::nullopt;
  const Token word = ts.next();

  auto decl_head = [&]() {
    std::string name = ts.expect_name();
    ts.expect_symbol("=");
    return name;
  };

  Statement st;
  const std::string& w = word.text;
  if (w == "ring") {
    RingDecl d;
    d.name = decl_head();
    st = detail::parse_ring_body(ts, std::move(d));
  } else if (w == "ideal") {
    IdealDecl d;
    d.name = decl_head();
    d.gens = detail::parse_expr_list(ts);
    st = std::move(d);
  } else if (w == "poly") {
    PolyDecl d;
    d.name = decl_head();
    d.value = parse_expr(ts);
    st = std::move(d);
  } else if (w == "module") {
    ModuleDecl d;
    d.name = decl_head();
    d.value = detail::parse_module(ts);
    st = std::move(d);
  } else if (w == "serre") {
    SerreDecl d;
    d.name = decl_head();
    d.value = detail::parse_serre(ts);
    st = std::move(d);
  } else if (w == "locus") {
    LocusDecl d;
    d.name = decl_head();
    d.value = detail::parse_locus(ts);
    st = std::move(d);
  } else if (w == "section") {
    SectionDecl d;
    d.name = decl_head();
    d.numerator = parse_expr(ts);
    ts.expect_symbol("/");
    d.denominator = detail::parse_atom(ts);
    d.power = 1;
    if (ts.accept_symbol("^")) d.power = ts.expect_integer();
    if (d.power < 0) throw SyntaxError(word.line, word.column, "section power must be non-negative");
    if (ts.is_identifier("mod")) {
      ts.next();
      d.ambient = detail::parse_ideal_ref(ts);
    }
    st = std::move(d);
  } else {
    const auto& sigs = command_signatures();
    const auto it = sigs.find(w);
    if (it == sigs.end()) throw SyntaxError(word.line, word.column, "unknown statement '" + w + "'");
    Command c;
    c.word = w;
    for (Param p : it->second) {
      if (p == Param::OptIdeal && ts.at_end()) break;
      c.args.push_back(detail::parse_param(ts, p));
    }
    st = std::move(c);
  }
  ts.expect_end();
  return st;
}

/// Parses a whole session; the first syntax error aborts with its position.
inline std::vector<SourceStatement> parse_session(const std::string& input) {
  std::vector<SourceStatement> out;
  std::istringstream in(input);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto st = parse_statement(line, number)) {
      auto hash = line.find('#');
      std::string text = line.substr(0, hash);
      const auto first = text.find_first_not_of(" \t");
      const auto last = text.find_last_not_of(" \t");
      out.push_back({number, text.substr(first, last - first + 1), std::move(*st)});
    }
  }
  return out;
}

}  // namespace projlat::script
