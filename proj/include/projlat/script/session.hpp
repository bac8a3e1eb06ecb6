#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "projlat/finite_spectral.hpp"
#include "projlat/script/parser.hpp"
#include "projlat/sections.hpp"
#include "projlat/serre.hpp"

namespace projlat::script {

using Json = nlohmann::ordered_json;

/// Field requested on the command line, replacing the field of every ring
/// declaration in the session.
struct FieldChoice {
  bool rational = true;
  std::uint64_t modulus = 0;
};

/// Accepts "QQ" or "GF:<p>".
inline FieldChoice parse_field_choice(const std::string& text) {
  if (text == "QQ") return {};
  if (text.rfind("GF:", 0) == 0 && text.size() > 3 && text.size() < 13 &&
      text.find_first_not_of("0123456789", 3) == std::string::npos) {
    const std::uint64_t p = std::stoull(text.substr(3));
    PrimeField check(p);  // validates primality
    return {false, check.modulus()};
  }
  throw ValidationError("field must be QQ or GF:<prime>, got '" + text + "'");
}

/// Reports the ring that owns a name bound outside the active ring.
using ForeignLookup = std::function<std::optional<std::string>(const std::string&)>;

/// The part of a session that lives over one ring.
class RingSession {
 public:
  virtual ~RingSession() = default;
  virtual Json execute(const Statement& st) = 0;
  virtual bool has(const std::string& name) const = 0;
  virtual void erase(const std::string& name) = 0;
  virtual std::string ring_string() const = 0;
};

namespace detail {

inline std::string cross_ring_message(const std::string& name, const std::string& owner, const std::string& active) {
  return "cross-ring use: '" + name + "' belongs to ring " + owner + ", active ring is " + active;
}

}  // namespace detail

template <Field K>
class Session final : public RingSession {
 public:
  using Binding = std::variant<Polynomial<K>, HomogeneousIdeal<K>, GradedModule<K>, SerreSupport<K>,
                               ThomasonDatum<K>, Section<K>>;

  Session(std::string name, RingPtr<K> ring, ForeignLookup foreign)
      : name_(std::move(name)), ring_(std::move(ring)), foreign_(std::move(foreign)) {}

  const RingPtr<K>& ring() const { return ring_; }
  std::string ring_string() const override { return ring_->to_string(); }
  bool has(const std::string& name) const override { return bindings_.count(name) > 0; }
  void erase(const std::string& name) override { bindings_.erase(name); }

  Json execute(const Statement& st) override {
    return std::visit([this](const auto& v) { return run(v); }, st);
  }

 private:
  static const char* kind_name(const Binding& b) {
    static const char* names[] = {"polynomial", "ideal", "module", "serre class", "locus", "section"};
    return names[b.index()];
  }

  static std::string with_article(const std::string& noun) {
    return (std::string("aeiou").find(noun.front()) != std::string::npos ? "an " : "a ") + noun;
  }

  [[noreturn]] void unknown(const std::string& name) const {
    if (foreign_) {
      if (auto owner = foreign_(name)) throw StructuralError(detail::cross_ring_message(name, *owner, name_));
    }
    throw ValidationError("unknown identifier '" + name + "'");
  }

  const Binding& lookup(const std::string& name) const {
    const auto it = bindings_.find(name);
    if (it == bindings_.end()) unknown(name);
    return it->second;
  }

  template <class T>
  const T& get(const std::string& name, const char* expected) const {
    const auto& b = lookup(name);
    if (const auto* v = std::get_if<T>(&b)) return *v;
    throw ValidationError("'" + name + "' is " + with_article(kind_name(b)) + ", expected " + with_article(expected));
  }

  template <class T>
  const T* find(const std::string& name) const {
    const auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : std::get_if<T>(&it->second);
  }

  void bind(const std::string& name, Binding value) {
    if (ring_->variable_index(name) >= 0) {
      throw ValidationError("'" + name + "' is a variable of the active ring and cannot be rebound");
    }
    bindings_.insert_or_assign(name, std::move(value));
  }

  Polynomial<K> poly(const Expr& e) const {
    NameResolver<K> resolve = [this](const std::string& name) -> std::optional<Polynomial<K>> {
      return get<Polynomial<K>>(name, "polynomial");
    };
    return evaluate(e, ring_, resolve);
  }

  // Generators from a list in which a bare ideal name stands for all of its
  // generators.
  std::vector<Polynomial<K>> generators(const std::vector<Expr>& items) const {
    std::vector<Polynomial<K>> out;
    for (const auto& e : items) {
      if (e.kind == Expr::Kind::Name && ring_->variable_index(e.text) < 0) {
        if (const auto* ideal = find<HomogeneousIdeal<K>>(e.text)) {
          out.insert(out.end(), ideal->generators().begin(), ideal->generators().end());
          continue;
        }
      }
      out.push_back(poly(e));
    }
    return out;
  }

  HomogeneousIdeal<K> ideal(const IdealRef& r) const {
    switch (r.kind) {
      case IdealRef::Kind::Irrelevant:
        return HomogeneousIdeal<K>::irrelevant(ring_);
      case IdealRef::Kind::Inline:
        return HomogeneousIdeal<K>(ring_, generators(r.polys));
      case IdealRef::Kind::Name:
        break;
    }
    if (ring_->variable_index(r.name) >= 0) return HomogeneousIdeal<K>(ring_, {poly(Expr::name(r.name))});
    const auto& b = lookup(r.name);
    if (const auto* p = std::get_if<Polynomial<K>>(&b)) return HomogeneousIdeal<K>(ring_, {*p});
    return get<HomogeneousIdeal<K>>(r.name, "ideal");
  }

  GradedModule<K> coker(const CokerSpec& spec) const {
    std::vector<int> shifts(spec.shifts.begin(), spec.shifts.end());
    std::vector<Column<K>> cols;
    for (std::size_t t = 0; t < spec.cols.size(); ++t) {
      Column<K> col;
      for (const auto& e : spec.cols[t]) col.push_back(poly(e));
      if (col.size() != shifts.size()) {
        throw ValidationError("column " + std::to_string(t + 1) + " has " + std::to_string(col.size()) +
                              " entries, expected " + std::to_string(shifts.size()));
      }
      cols.push_back(std::move(col));
    }
    std::vector<int> colshifts;
    if (spec.colshifts) {
      colshifts.assign(spec.colshifts->begin(), spec.colshifts->end());
    } else {
      for (std::size_t t = 0; t < cols.size(); ++t) colshifts.push_back(infer_column_shift(shifts, cols[t], t));
    }
    return GradedModule<K>(ring_, std::move(shifts), std::move(colshifts), std::move(cols));
  }

  // Entry (s,t) has degree d_s - c_t, so every nonzero entry determines c_t.
  static int infer_column_shift(const std::vector<int>& shifts, const Column<K>& col, std::size_t t) {
    std::optional<int> shift;
    std::size_t first = 0;
    const std::string column = "column " + std::to_string(t + 1);
    for (std::size_t s = 0; s < col.size(); ++s) {
      if (col[s].is_zero()) continue;
      if (!col[s].is_homogeneous()) {
        throw ValidationError(column + ": entry " + col[s].to_string() + " is " + col[s].inhomogeneity());
      }
      const int c = shifts[s] - col[s].weighted_degree();
      if (!shift) {
        shift = c;
        first = s;
      } else if (*shift != c) {
        throw ValidationError(column + " has ambiguous shift: row " + std::to_string(first + 1) + " gives " +
                              std::to_string(*shift) + " but row " + std::to_string(s + 1) + " gives " +
                              std::to_string(c) + "; give colshifts:[..] explicitly");
      }
    }
    if (!shift) throw ValidationError(column + " is zero, so its shift is ambiguous; give colshifts:[..] explicitly");
    return *shift;
  }

  GradedModule<K> module(const ModuleExpr& m) const {
    switch (m.kind) {
      case ModuleExpr::Kind::Name: {
        const auto& b = lookup(m.name);
        if (const auto* i = std::get_if<HomogeneousIdeal<K>>(&b)) return GradedModule<K>::cyclic(*i);
        return get<GradedModule<K>>(m.name, "module");
      }
      case ModuleExpr::Kind::Coker:
        return coker(m.coker);
      case ModuleExpr::Kind::Tensor:
        return tensor(module(m.args[0]), module(m.args[1]));
      case ModuleExpr::Kind::Sum:
        return direct_sum(module(m.args[0]), module(m.args[1]));
      case ModuleExpr::Kind::Shift:
        return shift(module(m.args[0]), checked_int(m.amount, "shift"));
      case ModuleExpr::Kind::Tail:
        return tail(module(m.args[0]), checked_int(m.amount, "tail degree"));
    }
    throw StructuralError("corrupt module expression");
  }

  static int checked_int(long long v, const char* what) {
    if (v < -100000 || v > 100000) throw ValidationError(std::string(what) + " out of range");
    return static_cast<int>(v);
  }

  ThomasonDatum<K> locus(const LocusExpr& l) const {
    std::vector<ClosedLocus<K>> parts;
    for (const auto& t : l.terms) {
      if (!t.is_name) {
        parts.emplace_back(HomogeneousIdeal<K>(ring_, generators(t.items)));
        continue;
      }
      const auto& b = lookup(t.name);
      if (const auto* d = std::get_if<ThomasonDatum<K>>(&b)) {
        parts.insert(parts.end(), d->components().begin(), d->components().end());
      } else if (const auto* s = std::get_if<SerreSupport<K>>(&b)) {
        parts.insert(parts.end(), s->datum.components().begin(), s->datum.components().end());
      } else if (const auto* i = std::get_if<HomogeneousIdeal<K>>(&b)) {
        parts.emplace_back(*i);
      } else {
        throw ValidationError("'" + t.name + "' is " + with_article(kind_name(b)) + ", expected a locus");
      }
    }
    return ThomasonDatum<K>(ring_, std::move(parts));
  }

  SerreSupport<K> serre(const SerreExpr& e) const {
    switch (e.kind) {
      case SerreExpr::Kind::Name: {
        const auto& b = lookup(e.name);
        if (const auto* d = std::get_if<ThomasonDatum<K>>(&b)) return serre_from_datum(*d);
        return get<SerreSupport<K>>(e.name, "serre class");
      }
      case SerreExpr::Kind::Gen: {
        std::vector<GradedModule<K>> mods;
        for (const auto& m : e.modules) mods.push_back(module(m));
        return serre_from_modules(ring_, mods);
      }
      case SerreExpr::Kind::Datum:
        return serre_from_datum(locus(e.locus));
      case SerreExpr::Kind::Join:
        return serre_join(serre(e.args[0]), serre(e.args[1]));
      case SerreExpr::Kind::Meet:
        return serre_meet(serre(e.args[0]), serre(e.args[1]));
    }
    throw StructuralError("corrupt serre expression");
  }

  static std::string binding_string(const Binding& b) {
    return std::visit([](const auto& v) { return v.to_string(); }, b);
  }

  Json run(const RingDecl&) { throw StructuralError("ring declarations are handled by the runner"); }

  Json run(const IdealDecl& d) {
    HomogeneousIdeal<K> i(ring_, generators(d.gens));
    bind(d.name, i);
    return i.to_string();
  }

  Json run(const PolyDecl& d) {
    auto p = poly(d.value);
    bind(d.name, p);
    return p.to_string();
  }

  Json run(const ModuleDecl& d) {
    auto m = module(d.value);
    bind(d.name, m);
    return m.to_string();
  }

  Json run(const SerreDecl& d) {
    auto s = serre(d.value);
    bind(d.name, s);
    return s.to_string();
  }

  Json run(const LocusDecl& d) {
    auto l = locus(d.value);
    bind(d.name, l);
    return l.to_string();
  }

  Json run(const SectionDecl& d) {
    std::optional<HomogeneousIdeal<K>> ambient;
    if (d.ambient) ambient = ideal(*d.ambient);
    if (d.power > 100000) throw ValidationError("section power out of range");
    Section<K> s(poly(d.denominator), poly(d.numerator), static_cast<unsigned>(d.power), ambient);
    bind(d.name, s);
    return s.to_string();
  }

  template <class T>
  const T& arg(const Command& c, std::size_t i) const {
    return std::get<T>(c.args.at(i));
  }

  Json run(const Command& c) {
    const std::string& w = c.word;
    if (w == "sat") {
      const auto by = c.args.size() > 1 ? ideal(arg<IdealRef>(c, 1)) : HomogeneousIdeal<K>::irrelevant(ring_);
      return saturate(ideal(arg<IdealRef>(c, 0)), by).canonical().to_string();
    }
    if (w == "gb") {
      Json out = Json::array();
      for (const auto& g : ideal(arg<IdealRef>(c, 0)).groebner_basis()) out.push_back(g.to_string());
      return out;
    }
    if (w == "in?") return ideal(arg<IdealRef>(c, 1)).contains(poly(arg<Expr>(c, 0)));
    if (w == "radical?") return radical_contains(ideal(arg<IdealRef>(c, 1)), poly(arg<Expr>(c, 0)));
    if (w == "ann") return annihilator(module(arg<ModuleExpr>(c, 0))).canonical().to_string();
    if (w == "torsion?") return is_torsion(module(arg<ModuleExpr>(c, 0)));
    if (w == "torsion") return torsion_submodule(module(arg<ModuleExpr>(c, 0))).to_string();
    if (w == "supp") return support(module(arg<ModuleExpr>(c, 0))).to_string();
    if (w == "hilbert") {
      const auto m = module(arg<ModuleExpr>(c, 0));
      const auto& r = arg<Range>(c, 1);
      if (r.hi < r.lo || r.hi - r.lo > 1000) throw ValidationError("hilbert range must satisfy lo <= hi <= lo + 1000");
      Json dims = Json::array();
      for (long long j = r.lo; j <= r.hi; ++j) dims.push_back(hilbert_dim(m, checked_int(j, "degree")));
      Json out;
      out["from"] = r.lo;
      out["to"] = r.hi;
      out["dims"] = dims;
      return out;
    }
    if (w == "subset?") return locus(arg<LocusExpr>(c, 0)).subset_of(locus(arg<LocusExpr>(c, 1)));
    if (w == "empty?") return locus(arg<LocusExpr>(c, 0)).is_empty();
    if (w == "member?") {
      SerreExpr e;
      e.name = arg<NameArg>(c, 1).name;
      return serre_contains(serre(e), module(arg<ModuleExpr>(c, 0)));
    }
    if (w == "prime-member?") return point_prime_membership(ideal(arg<IdealRef>(c, 1)), module(arg<ModuleExpr>(c, 0)));
    if (w == "roundtrip") return roundtrip(arg<LocusExpr>(c, 0));
    if (w == "sections") return sections(poly(arg<Expr>(c, 0)));
    if (w == "restrict") {
      const auto& s = get<Section<K>>(arg<NameArg>(c, 0).name, "section");
      return restrict(s, poly(arg<Expr>(c, 1))).to_string();
    }
    if (w == "eq?") {
      return section_eq(get<Section<K>>(arg<NameArg>(c, 0).name, "section"),
                        get<Section<K>>(arg<NameArg>(c, 1).name, "section"));
    }
    if (w == "germ-eq?") {
      return germ_eq(get<Section<K>>(arg<NameArg>(c, 0).name, "section"),
                     get<Section<K>>(arg<NameArg>(c, 1).name, "section"), ideal(arg<IdealRef>(c, 2)));
    }
    if (w == "print") return binding_string(lookup(arg<NameArg>(c, 0).name));
    throw StructuralError("command '" + w + "' is not available inside a ring");
  }

  Json roundtrip(const LocusExpr& l) const {
    ClassificationReport r;
    const bool serre_name = l.terms.size() == 1 && l.terms[0].is_name && find<SerreSupport<K>>(l.terms[0].name);
    if (serre_name) {
      r = classification_round_trip(*find<SerreSupport<K>>(l.terms[0].name));
    } else {
      r = classification_round_trip_open(locus(l));
    }
    Json out;
    out["subject"] = r.title.substr(std::string("round trip ").size());
    out["status"] = r.passed() ? "PASS" : "FAIL";
    out["checks"] = r.checks;
    out["localizing_finite_type"] = r.localizing_finite_type;
    if (!r.passed()) out["failures"] = r.failures;
    return out;
  }

  /// Generators m/f^k of A_(f): the monomials m of degree k·deg f with no
  /// proper divisor of degree divisible by deg f. Each has total exponent at
  /// most deg f (prefix sums modulo deg f), so k ≤ max weight suffices.
  Json sections(const Polynomial<K>& f) const {
    Section<K> one(f, Polynomial<K>::one(ring_), 0);  // validates f
    const int e = f.weighted_degree();
    const auto& w = ring_->weights();
    Json gens = Json::array();
    for (int k = 1; k <= ring_->max_weight(); ++k) {
      for (const auto& m : monomials_of_degree(w, k * e)) {
        if (!indecomposable(m, e)) continue;
        const Section<K> s(f, Polynomial<K>::monomial(ring_, m, ring_->field().one()), static_cast<unsigned>(k));
        if (section_eq(s, one)) continue;
        gens.push_back(s.to_string());
      }
    }
    Json out;
    out["open"] = "D(" + f.to_string() + ")";
    out["generators"] = gens;
    return out;
  }

  bool indecomposable(const Monomial& m, int e) const {
    const auto& w = ring_->weights();
    const std::size_t n = m.size();
    Monomial d(n);
    const int total = m.weighted_degree(w);
    // Walk every divisor d of m in mixed-radix order.
    for (;;) {
      std::size_t i = 0;
      while (i < n && d[i] == m[i]) d[i++] = 0;
      if (i == n) return true;
      ++d[i];
      const int deg = d.weighted_degree(w);
      if (deg < total && deg % e == 0) return false;
    }
  }

  std::string name_;
  RingPtr<K> ring_;
  ForeignLookup foreign_;
  std::map<std::string, Binding> bindings_;
};

/// Verdicts of the exhaustive finite-model checks for n variables.
inline Json finite_verify_report(long long n) {
  if (n < 1 || n > 4) throw PreconditionError("finite verification needs 1 <= n <= 4");
  const auto v = finite_verify(static_cast<std::size_t>(n));
  auto status = [](const Report& r) { return r.passed() ? "PASS" : "FAIL"; };
  Json out;
  out["n"] = n;
  out["duality"] = status(v.spectral.duality);
  out["L1-L5"] = status(v.spectral.axioms);
  out["soberification"] = status(v.spectral.soberification);
  out["classification"] = status(v.classification);
  const auto total = v.total();
  out["checks"] = total.checks;
  if (!total.passed()) out["failures"] = total.failures;
  return out;
}

/// Outcome of one statement.
struct StatementResult {
  std::string cmd;
  bool ok = true;
  Json result;
  double ms = 0;
};

/// Drives a parsed session: owns one RingSession per declared ring and
/// routes statements to the active one.
class Runner {
 public:
  explicit Runner(std::optional<FieldChoice> field = std::nullopt) : field_(field) {}

  StatementResult run(const SourceStatement& s) {
    StatementResult out;
    out.cmd = s.text;
    const auto start = std::chrono::steady_clock::now();
    try {
      out.result = dispatch(s.statement);
    } catch (const std::exception& e) {
      out.ok = false;
      out.result = Json::object();
      out.result["error"] = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    out.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return out;
  }

  const std::string& active_ring() const { return active_; }

 private:
  Json dispatch(const Statement& st) {
    if (const auto* r = std::get_if<RingDecl>(&st)) return declare_ring(*r);
    if (const auto* c = std::get_if<Command>(&st)) {
      if (c->word == "finite-verify") return finite_verify_report(std::get<KeyValue>(c->args.at(0)).value);
      if (c->word == "use") return use(std::get<NameArg>(c->args.at(0)).name);
      if (c->word == "print") {
        const auto& name = std::get<NameArg>(c->args.at(0)).name;
        if (const auto it = rings_.find(name); it != rings_.end()) return it->second->ring_string();
      }
    }
    if (active_.empty()) throw PreconditionError("no active ring; declare one first, e.g. 'ring A = QQ[x, y]'");
    auto& session = *rings_.at(active_);
    const auto result = session.execute(st);
    if (const auto name = declared_name(st)) claim(*name);
    return result;
  }

  static std::optional<std::string> declared_name(const Statement& st) {
    return std::visit(
        [](const auto& v) -> std::optional<std::string> {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Command>) {
            return std::nullopt;
          } else {
            return v.name;
          }
        },
        st);
  }

  // Records that the active ring now owns `name`, dropping older bindings of
  // the same name elsewhere.
  void claim(const std::string& name) {
    const auto it = owner_.find(name);
    if (it != owner_.end() && it->second != active_) {
      if (const auto r = rings_.find(it->second); r != rings_.end()) r->second->erase(name);
    }
    owner_[name] = active_;
  }

  Json declare_ring(const RingDecl& d) {
    if (rings_.count(d.name) == 0 && owner_.count(d.name)) {
      throw ValidationError("'" + d.name + "' is already bound in ring " + owner_.at(d.name));
    }
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& [v, w] : d.vars) {
      if (w < 1 || w > 1000) throw ValidationError("weight of " + v + " must be an integer in [1, 1000]");
      names.push_back(v);
      weights.push_back(static_cast<int>(w));
    }
    FieldChoice field;
    if (field_) {
      field = *field_;
    } else if (d.field == "GF") {
      if (d.modulus < 2 || d.modulus >= (1LL << 31)) throw ValidationError("prime modulus must lie in [2, 2^31)");
      field = {false, static_cast<std::uint64_t>(d.modulus)};
    }
    auto lookup = [this](const std::string& name) -> std::optional<std::string> {
      const auto it = owner_.find(name);
      if (it == owner_.end() || it->second == active_) return std::nullopt;
      return it->second;
    };
    std::unique_ptr<RingSession> session;
    if (field.rational) {
      session = std::make_unique<Session<Rationals>>(d.name, make_ring(Rationals{}, names, weights), lookup);
    } else {
      session = std::make_unique<Session<PrimeField>>(d.name, make_ring(PrimeField(field.modulus), names, weights),
                                                      lookup);
    }
    for (auto it = owner_.begin(); it != owner_.end();) {
      it = it->second == d.name ? owner_.erase(it) : std::next(it);
    }
    std::string desc = session->ring_string();
    rings_[d.name] = std::move(session);
    active_ = d.name;
    return desc;
  }

  Json use(const std::string& name) {
    const auto it = rings_.find(name);
    if (it == rings_.end()) throw ValidationError("unknown ring '" + name + "'");
    active_ = name;
    return it->second->ring_string();
  }

  std::optional<FieldChoice> field_;
  std::map<std::string, std::unique_ptr<RingSession>> rings_;
  std::map<std::string, std::string> owner_;
  std::string active_;
};

// ---------------------------------------------------------------------------
// Output.

inline std::string json_line(const StatementResult& r) {
  Json j;
  j["cmd"] = r.cmd;
  j["ok"] = r.ok;
  j["result"] = r.result;
  j["ms"] = std::round(r.ms * 1000.0) / 1000.0;
  return j.dump();
}

inline std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string text_block(const StatementResult& r) {
  std::string s = "> " + r.cmd + "\n";
  if (r.result.is_object()) {
    for (const auto& [k, v] : r.result.items()) s += "  " + k + ": " + text_value(v) + "\n";
  } else if (r.result.is_array()) {
    for (const auto& v : r.result) s += "  " + text_value(v) + "\n";
  } else {
    s += "  " + text_value(r.result) + "\n";
  }
  return s;
}

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitSemantic = 3 };

struct RunOptions {
  bool json = false;
  std::optional<FieldChoice> field;
};

/// Parses the whole input, then executes every statement in order.
/// Returns 0 when all succeed, 2 on a syntax error (nothing runs), and 3
/// when at least one statement failed.
inline int run_session(const std::string& input, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<SourceStatement> program;
  try {
    program = parse_session(input);
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  Runner runner(opts.field);
  int code = kExitOk;
  for (const auto& s : program) {
    const auto r = runner.run(s);
    if (!r.ok) code = kExitSemantic;
    out << (opts.json ? json_line(r) + "\n" : text_block(r));
    if (!r.ok && !opts.json) err << "line " << s.line << ": " << r.result["error"].get<std::string>() << "\n";
  }
  return code;
}

/// Line-by-line interactive loop. Errors are reported and the loop goes on.
inline void run_repl(std::istream& in, std::ostream& out, const RunOptions& opts, bool prompt) {
  Runner runner(opts.field);
  std::string line;
  int number = 0;
  for (;;) {
    if (prompt) out << "projlat> " << std::flush;
    if (!std::getline(in, line)) break;
    ++number;
    try {
      auto program = parse_session(line);
      for (auto& s : program) {
        s.line = number;
        const auto r = runner.run(s);
        out << (opts.json ? json_line(r) + "\n" : text_block(r));
      }
    } catch (const SyntaxError& e) {
      out << "parse error: " << e.what() << "\n";
    }
  }
}

}  // namespace projlat::script
