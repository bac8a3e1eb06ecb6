#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "projlat/script/expr.hpp"

namespace projlat::script {

/// An ideal argument: a bound name, an inline list `(f, g, ...)` or the
/// keyword `irrelevant` for A_+.
struct IdealRef {
  enum class Kind { Name, Inline, Irrelevant };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<Expr> polys;

  friend bool operator==(const IdealRef&, const IdealRef&) = default;
};

struct CokerSpec {
  std::vector<long long> shifts;
  std::vector<std::vector<Expr>> cols;
  std::optional<std::vector<long long>> colshifts;

  friend bool operator==(const CokerSpec&, const CokerSpec&) = default;
};

/// Module expressions: a bound name, `coker{...}`, or one of the builders
/// tensor(M,N), sum(M,N), shift(M,k), tail(M,d).
struct ModuleExpr {
  enum class Kind { Name, Coker, Tensor, Sum, Shift, Tail };
  Kind kind = Kind::Name;
  std::string name;
  CokerSpec coker;
  std::vector<ModuleExpr> args;
  long long amount = 0;

  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

/// One term of a locus expression: `V(f, g, ...)` or a bound locus name.
/// `V(I)` with a single bare name is resolved at run time, preferring an
/// ideal binding over a polynomial.
struct LocusTerm {
  bool is_name = false;
  std::string name;
  std::vector<Expr> items;

  friend bool operator==(const LocusTerm&, const LocusTerm&) = default;
};

/// A finite union `T1 | T2 | ...`.
struct LocusExpr {
  std::vector<LocusTerm> terms;

  friend bool operator==(const LocusExpr&, const LocusExpr&) = default;
};

/// Serre class expressions: gen(M, ...), a locus expression, join(S,T),
/// meet(S,T), or a bound name.
struct SerreExpr {
  enum class Kind { Name, Gen, Datum, Join, Meet };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<ModuleExpr> modules;
  LocusExpr locus;
  std::vector<SerreExpr> args;

  friend bool operator==(const SerreExpr&, const SerreExpr&) = default;
};

struct RingDecl {
  std::string name;
  std::string field;  // "QQ" or "GF"
  long long modulus = 0;
  std::vector<std::pair<std::string, long long>> vars;

  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name;
  std::vector<Expr> gens;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct PolyDecl {
  std::string name;
  Expr value;
  friend bool operator==(const PolyDecl&, const PolyDecl&) = default;
};

struct ModuleDecl {
  std::string name;
  ModuleExpr value;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct SerreDecl {
  std::string name;
  SerreExpr value;
  friend bool operator==(const SerreDecl&, const SerreDecl&) = default;
};

struct LocusDecl {
  std::string name;
  LocusExpr value;
  friend bool operator==(const LocusDecl&, const LocusDecl&) = default;
};

/// `section s = g / f^k [mod I]`.
struct SectionDecl {
  std::string name;
  Expr numerator;
  Expr denominator;
  long long power = 1;
  std::optional<IdealRef> ambient;
  friend bool operator==(const SectionDecl&, const SectionDecl&) = default;
};

struct Range {
  long long lo = 0;
  long long hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

struct KeyValue {
  std::string key;
  long long value = 0;
  friend bool operator==(const KeyValue&, const KeyValue&) = default;
};

struct NameArg {
  std::string name;
  friend bool operator==(const NameArg&, const NameArg&) = default;
};

using Arg = std::variant<Expr, IdealRef, ModuleExpr, LocusExpr, NameArg, Range, KeyValue>;

struct Command {
  std::string word;
  std::vector<Arg> args;
  friend bool operator==(const Command&, const Command&) = default;
};

using Statement =
    std::variant<RingDecl, IdealDecl, PolyDecl, ModuleDecl, SerreDecl, LocusDecl, SectionDecl, Command>;

/// A parsed statement with its source position and original text.
struct SourceStatement {
  int line = 0;
  std::string text;
  Statement statement;
};

// ---------------------------------------------------------------------------
// Rendering. Output reparses to an equal statement.

inline std::string render_ints(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string render_list(const std::vector<Expr>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
  return s;
}

inline std::string render(const IdealRef& r) {
  switch (r.kind) {
    case IdealRef::Kind::Name:
      return r.name;
    case IdealRef::Kind::Irrelevant:
      return "irrelevant";
    case IdealRef::Kind::Inline:
      return "(" + render_list(r.polys) + ")";
  }
  return {};
}

inline std::string render(const ModuleExpr& m) {
  switch (m.kind) {
    case ModuleExpr::Kind::Name:
      return m.name;
    case ModuleExpr::Kind::Coker: {
      std::string s = "coker{shifts:" + render_ints(m.coker.shifts) + "; cols:[";
      for (std::size_t t = 0; t < m.coker.cols.size(); ++t) {
        s += (t ? ", [" : "[") + render_list(m.coker.cols[t]) + "]";
      }
      s += "]";
      if (m.coker.colshifts) s += "; colshifts:" + render_ints(*m.coker.colshifts);
      return s + "}";
    }
    case ModuleExpr::Kind::Tensor:
      return "tensor(" + render(m.args[0]) + ", " + render(m.args[1]) + ")";
    case ModuleExpr::Kind::Sum:
      return "sum(" + render(m.args[0]) + ", " + render(m.args[1]) + ")";
    case ModuleExpr::Kind::Shift:
      return "shift(" + render(m.args[0]) + ", " + std::to_string(m.amount) + ")";
    case ModuleExpr::Kind::Tail:
      return "tail(" + render(m.args[0]) + ", " + std::to_string(m.amount) + ")";
  }
  return {};
}

inline std::string render(const LocusExpr& l) {
  std::string s;
  for (std::size_t i = 0; i < l.terms.size(); ++i) {
    if (i) s += " | ";
    const auto& t = l.terms[i];
    s += t.is_name ? t.name : "V(" + render_list(t.items) + ")";
  }
  return s;
}

inline std::string render(const SerreExpr& e) {
  switch (e.kind) {
    case SerreExpr::Kind::Name:
      return e.name;
    case SerreExpr::Kind::Gen: {
      std::string s = "gen(";
      for (std::size_t i = 0; i < e.modules.size(); ++i) s += (i ? ", " : "") + render(e.modules[i]);
      return s + ")";
    }
    case SerreExpr::Kind::Datum:
      return render(e.locus);
    case SerreExpr::Kind::Join:
      return "join(" + render(e.args[0]) + ", " + render(e.args[1]) + ")";
    case SerreExpr::Kind::Meet:
      return "meet(" + render(e.args[0]) + ", " + render(e.args[1]) + ")";
  }
  return {};
}

inline std::string render(const Arg& a) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NameArg>) {
          return v.name;
        } else if constexpr (std::is_same_v<T, Range>) {
          return std::to_string(v.lo) + ".." + std::to_string(v.hi);
        } else if constexpr (std::is_same_v<T, KeyValue>) {
          return v.key + "=" + std::to_string(v.value);
        } else {
          return render(v);
        }
      },
      a);
}

inline std::string render(const Statement& st) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RingDecl>) {
          std::string s = "ring " + v.name + " = ";
          s += v.field == "GF" ? "GF(" + std::to_string(v.modulus) + ")" : v.field;
          s += "[";
          for (std::size_t i = 0; i < v.vars.size(); ++i) {
            s += (i ? ", " : "") + v.vars[i].first + ":" + std::to_string(v.vars[i].second);
          }
          return s + "]";
        } else if constexpr (std::is_same_v<T, IdealDecl>) {
          return "ideal " + v.name + " = " + render_list(v.gens);
        } else if constexpr (std::is_same_v<T, PolyDecl>) {
          return "poly " + v.name + " = " + render(v.value);
        } else if constexpr (std::is_same_v<T, ModuleDecl>) {
          return "module " + v.name + " = " + render(v.value);
        } else if constexpr (std::is_same_v<T, SerreDecl>) {
          return "serre " + v.name + " = " + render(v.value);
        } else if constexpr (std::is_same_v<T, LocusDecl>) {
          return "locus " + v.name + " = " + render(v.value);
        } else if constexpr (std::is_same_v<T, SectionDecl>) {
          const auto& d = v.denominator;
          const bool atomic = d.kind == Expr::Kind::Number || d.kind == Expr::Kind::Name;
          std::string s = "section " + v.name + " = " + render(v.numerator) + " / " +
                          (atomic ? render(d) : "(" + render(d) + ")") + "^" + std::to_string(v.power);
          if (v.ambient) s += " mod " + render(*v.ambient);
          return s;
        } else {
          std::string s = v.word;
          for (const auto& a : v.args) s += " " + render(a);
          return s;
        }
      },
      st);
}

}  // namespace projlat::script
