#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projlat/error.hpp"
#include "projlat/ring.hpp"

namespace projlat {

/// Sparse polynomial over a GradedRing. Terms are nonzero and kept strictly
/// descending in the ring's canonical order, so equality is structural.
template <Field K>
class Polynomial {
 public:
  using value_type = typename K::value_type;
  using Term = std::pair<Monomial, value_type>;

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  Polynomial(RingPtr<K> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& [m, c] : terms_) {
      if (m.size() != ring_->nvars()) throw StructuralError("exponent vector has wrong length");
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw ValidationError("negative exponent");
      }
    }
    normalize();
  }

  static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr<K> ring, value_type c) {
    const std::size_t n = ring->nvars();
    return Polynomial(std::move(ring), {{Monomial(n), std::move(c)}});
  }

  static Polynomial one(RingPtr<K> ring) {
    auto c = ring->field().one();
    return constant(std::move(ring), c);
  }

  static Polynomial variable(RingPtr<K> ring, std::size_t i) {
    const std::size_t n = ring->nvars();
    auto c = ring->field().one();
    return Polynomial(std::move(ring), {{Monomial::variable(n, i), c}});
  }

  static Polynomial monomial(RingPtr<K> ring, Monomial m, value_type c) {
    return Polynomial(std::move(ring), {{std::move(m), std::move(c)}});
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const {
    if (terms_.empty()) throw DegreeUndefined();
    return terms_.front();
  }

  int term_degree(const Monomial& m) const { return m.weighted_degree(ring_->weights()); }

  /// Largest weighted degree among the terms.
  int weighted_degree() const {
    if (terms_.empty()) throw DegreeUndefined();
    int d = term_degree(terms_.front().first);
    for (const auto& t : terms_) d = std::max(d, term_degree(t.first));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (term_degree(t.first) != term_degree(terms_.front().first)) return false;
    }
    return true;
  }

  /// Degree-sorted homogeneous pieces; empty for the zero polynomial.
  std::vector<std::pair<int, Polynomial>> homogeneous_components() const {
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : terms_) parts[term_degree(t.first)].push_back(t);
    std::vector<std::pair<int, Polynomial>> out;
    for (auto& [d, ts] : parts) out.emplace_back(d, Polynomial(ring_, std::move(ts)));
    return out;
  }

  /// "inhomogeneous, components of degrees 1 and 2" style diagnostic.
  std::string inhomogeneity() const {
    const auto parts = homogeneous_components();
    std::string s = "inhomogeneous, components of degrees ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += i + 1 == parts.size() ? " and " : ", ";
      s += std::to_string(parts[i].first);
    }
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = field().neg(t.second);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const K& k = a.field();
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, k.mul(ca, cb));
    }
    return Polynomial(a.ring_, std::move(prod));
  }

  Polynomial scaled(const value_type& c) const {
    if (field().is_zero(c)) return zero(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = field().mul(t.second, c);
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Divides by the leading coefficient.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field().inv(terms_.front().second));
  }

  /// Exact quotient a / b if b divides a, else nullopt.
  friend std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    const K& k = a.field();
    const auto& [lm, lc] = b.leading_term();
    const auto lc_inv = k.inv(lc);
    Polynomial rem = a;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const auto& [m, c] = rem.leading_term();
      if (!lm.divides(m)) return std::nullopt;
      Term q{m / lm, k.mul(c, lc_inv)};
      rem = rem - b.times_monomial(q.first).scaled(q.second);
      quot.push_back(std::move(q));
    }
    return Polynomial(a.ring_, std::move(quot));
  }

  /// Image in a ring with extra trailing (auxiliary) variables.
  Polynomial embedded(const RingPtr<K>& bigger) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ts.emplace_back(m.extended(bigger->nvars()), c);
    return Polynomial(bigger, std::move(ts));
  }

  /// Image in a ring with fewer trailing variables; requires they do not occur.
  Polynomial restricted(const RingPtr<K>& smaller) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = smaller->nvars(); i < m.size(); ++i) {
        if (m[i] != 0) throw StructuralError("cannot drop a variable that occurs");
      }
      ts.emplace_back(m.truncated(smaller->nvars()), c);
    }
    return Polynomial(smaller, std::move(ts));
  }

  bool uses_variable(std::size_t i) const {
    return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.first[i] != 0; });
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const K& k = field();
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool positive = k.is_positive_form(c);
      const value_type mag = positive ? c : k.neg(c);
      if (first) {
        if (!positive) s += "-";
      } else {
        s += positive ? " + " : " - ";
      }
      first = false;
      const std::string mono = monomial_string(m);
      if (mono.empty()) {
        s += k.to_string(mag);
      } else if (k.is_one(mag)) {
        s += mono;
      } else {
        s += k.to_string(mag) + "*" + mono;
      }
    }
    return s;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->names()[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    const K& k = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first)) return false;
      if (!k.is_zero(k.sub(a.terms_[i].second, b.terms_[i].second))) return false;
    }
    return true;
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    const K& k = a.field();
    const auto order = a.ring_->canonical_order();
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.push_back(a.terms_[i++]);
        continue;
      }
      value_type cb = subtract ? k.neg(b.terms_[j].second) : b.terms_[j].second;
      if (i == a.terms_.size()) {
        out.emplace_back(b.terms_[j++].first, std::move(cb));
        continue;
      }
      const auto cmp = order.compare(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        out.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        out.emplace_back(b.terms_[j++].first, std::move(cb));
      } else {
        value_type s = k.add(a.terms_[i].second, cb);
        if (!k.is_zero(s)) out.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    Polynomial r(a.ring_);
    r.terms_ = std::move(out);
    return r;
  }

  void normalize() {
    const auto order = ring_->canonical_order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return order.compare(x.first, y.first) > 0; });
    const K& k = field();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = k.add(out.back().second, t.second);
      } else {
        if (!out.empty() && k.is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

template <Field K>
Polynomial<K> operator*(const typename K::value_type& c, const Polynomial<K>& f) {
  return f.scaled(c);
}

}  // namespace projlat
