#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "projlat/groebner.hpp"
#include "projlat/polynomial.hpp"

namespace projlat {

namespace detail {

template <Field K>
ModuleVector<K> to_vector(const Polynomial<K>& f, int comp = 0) {
  ModuleVector<K> v;
  v.reserve(f.size());
  for (const auto& [m, c] : f.terms()) v.push_back(ModuleTerm<K>{comp, m, c});
  return v;
}

template <Field K>
Polynomial<K> from_vector(const RingPtr<K>& ring, const ModuleVector<K>& v) {
  std::vector<typename Polynomial<K>::Term> ts;
  ts.reserve(v.size());
  for (const auto& t : v) ts.emplace_back(t.mono, t.coef);
  return Polynomial<K>(ring, std::move(ts));
}

/// A fresh variable name for an auxiliary variable.
template <Field K>
std::string auxiliary_name(const GradedRing<K>& ring) {
  std::string name = "aux";
  for (int i = 0; ring.variable_index(name) >= 0; ++i) name = "aux" + std::to_string(i);
  return name;
}

}  // namespace detail

/// Groebner basis of polynomials under an arbitrary monomial order; the
/// generators need not be homogeneous. Result is reduced, monic, ascending.
template <Field K>
std::vector<Polynomial<K>> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                                      const MonomialOrder& order) {
  GroebnerEngine<K> engine(ring->field(), ModuleOrder::for_ideal(order));
  std::vector<ModuleVector<K>> vs;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    auto v = detail::to_vector(g);
    engine.canonicalize(v);
    vs.push_back(std::move(v));
  }
  std::vector<Polynomial<K>> out;
  for (const auto& v : engine.groebner(vs)) out.push_back(detail::from_vector(ring, v));
  return out;
}

/// Remainder of f modulo a Groebner basis for `order`.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order) {
  GroebnerEngine<K> engine(f.field(), ModuleOrder::for_ideal(order));
  std::vector<ModuleVector<K>> bs;
  for (const auto& b : basis) {
    auto v = detail::to_vector(b);
    engine.canonicalize(v);
    bs.push_back(std::move(v));
  }
  auto v = detail::to_vector(f);
  engine.canonicalize(v);
  return detail::from_vector(f.ring(), engine.reduce(std::move(v), bs));
}

/// Finitely generated homogeneous ideal. The reduced Groebner basis for the
/// ring's canonical order is computed on first use and shared by copies.
template <Field K>
class HomogeneousIdeal {
 public:
  HomogeneousIdeal(RingPtr<K> ring, std::vector<Polynomial<K>> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) {
        throw ValidationError("generator " + g.to_string() + " is " + g.inhomogeneity());
      }
      gens_.push_back(std::move(g));
    }
  }

  static HomogeneousIdeal zero(RingPtr<K> ring) { return HomogeneousIdeal(std::move(ring), {}); }

  static HomogeneousIdeal unit(RingPtr<K> ring) {
    auto one = Polynomial<K>::one(ring);
    return HomogeneousIdeal(std::move(ring), {one});
  }

  /// A_+ = (x_1, ..., x_n).
  static HomogeneousIdeal irrelevant(RingPtr<K> ring) {
    std::vector<Polynomial<K>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial<K>::variable(ring, i));
    return HomogeneousIdeal(std::move(ring), std::move(vars));
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

  const std::vector<Polynomial<K>>& groebner_basis() const {
    std::call_once(cache_->once, [this] {
      cache_->basis = buchberger(ring_, gens_, ring_->canonical_order());
    });
    return cache_->basis;
  }

  Polynomial<K> normal_form(const Polynomial<K>& f) const {
    require_same_ring(ring_, f.ring());
    return projlat::normal_form(f, groebner_basis(), ring_->canonical_order());
  }

  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

  bool contains(const HomogeneousIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (const auto& g : other.gens_) {
      if (!contains(g)) return false;
    }
    return true;
  }

  bool is_zero() const { return gens_.empty(); }

  bool is_unit() const {
    const auto& b = groebner_basis();
    return b.size() == 1 && b.front().is_constant();
  }

  bool is_monomial() const {
    for (const auto& g : gens_) {
      if (!g.is_monomial()) return false;
    }
    return true;
  }

  /// The same ideal, generated by its reduced Groebner basis.
  HomogeneousIdeal canonical() const { return HomogeneousIdeal(ring_, groebner_basis()); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

  /// Equality as ideals (reduced bases agree).
  friend bool operator==(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
    return a.groebner_basis() == b.groebner_basis();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial<K>> basis;
  };

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <Field K>
HomogeneousIdeal<K> operator+(const HomogeneousIdeal<K>& a, const HomogeneousIdeal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return HomogeneousIdeal<K>(a.ring(), std::move(gens));
}

template <Field K>
HomogeneousIdeal<K> operator*(const HomogeneousIdeal<K>& a, const HomogeneousIdeal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return HomogeneousIdeal<K>(a.ring(), std::move(gens));
}

template <Field K>
HomogeneousIdeal<K> power(const HomogeneousIdeal<K>& a, unsigned t) {
  HomogeneousIdeal<K> r = HomogeneousIdeal<K>::unit(a.ring());
  for (unsigned i = 0; i < t; ++i) r = r * a;
  return r;
}

/// I ∩ J via elimination of a weight-zero variable t from tI + (1 - t)J.
template <Field K>
HomogeneousIdeal<K> intersect(const HomogeneousIdeal<K>& a, const HomogeneousIdeal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return HomogeneousIdeal<K>::zero(ring);
  auto big = ring->with_auxiliary(detail::auxiliary_name(*ring));
  const std::size_t t_index = ring->nvars();
  const auto t = Polynomial<K>::variable(big, t_index);
  const auto one_minus_t = Polynomial<K>::one(big) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embedded(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embedded(big));
  std::vector<bool> elim(big->nvars(), false);
  elim[t_index] = true;
  const auto basis = buchberger(big, gens, MonomialOrder::elimination(big->weights(), elim));
  std::vector<Polynomial<K>> out;
  for (const auto& g : basis) {
    if (!g.uses_variable(t_index)) out.push_back(g.restricted(ring));
  }
  return HomogeneousIdeal<K>(ring, std::move(out));
}

/// (I : f) = (I ∩ (f)) / f.
template <Field K>
HomogeneousIdeal<K> quotient(const HomogeneousIdeal<K>& a, const Polynomial<K>& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw PreconditionError("colon by zero ideal");
  const auto both = intersect(a, HomogeneousIdeal<K>(a.ring(), {f}));
  std::vector<Polynomial<K>> out;
  for (const auto& g : both.generators()) {
    auto q = exact_quotient(g, f);
    if (!q) throw StructuralError("intersection generator not divisible by " + f.to_string());
    out.push_back(std::move(*q));
  }
  return HomogeneousIdeal<K>(a.ring(), std::move(out));
}

/// (I : J) = ∩_{g in gens J} (I : g).
template <Field K>
HomogeneousIdeal<K> quotient(const HomogeneousIdeal<K>& a, const HomogeneousIdeal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw PreconditionError("colon by zero ideal");
  std::optional<HomogeneousIdeal<K>> acc;
  for (const auto& g : b.generators()) {
    auto q = quotient(a, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc->canonical();
}

/// (I : J^∞), iterating the colon until it stabilizes.
template <Field K>
HomogeneousIdeal<K> saturate(const HomogeneousIdeal<K>& a, const HomogeneousIdeal<K>& b) {
  if (b.is_zero()) throw PreconditionError("colon by zero ideal");
  HomogeneousIdeal<K> current = a.canonical();
  for (;;) {
    HomogeneousIdeal<K> next = quotient(current, b);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

/// f ∈ √I, decided by 1 ∈ I + (1 - u f) in the ring extended by a weight-zero u.
template <Field K>
bool radical_contains(const HomogeneousIdeal<K>& ideal, const Polynomial<K>& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero() || ideal.contains(f)) return true;
  if (ideal.is_zero()) return false;
  const auto& ring = ideal.ring();
  auto big = ring->with_auxiliary(detail::auxiliary_name(*ring));
  const std::size_t u_index = ring->nvars();
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedded(big));
  gens.push_back(Polynomial<K>::one(big) - Polynomial<K>::variable(big, u_index) * f.embedded(big));
  std::vector<bool> elim(big->nvars(), false);
  elim[u_index] = true;
  const auto basis = buchberger(big, gens, MonomialOrder::elimination(big->weights(), elim));
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

}  // namespace projlat
