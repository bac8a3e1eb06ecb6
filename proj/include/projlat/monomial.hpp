#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "projlat/error.hpp"

namespace projlat {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.exps_[i] = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  int total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  int weighted_degree(std::span<const int> weights) const {
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * weights[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  Monomial pow(int k) const {
    Monomial r = *this;
    for (int& e : r.exps_) e *= k;
    return r;
  }

  /// Same monomial in a ring with extra trailing variables.
  Monomial extended(std::size_t nvars) const {
    Monomial r = *this;
    r.exps_.resize(nvars, 0);
    return r;
  }

  Monomial truncated(std::size_t nvars) const {
    return Monomial(std::vector<int>(exps_.begin(), exps_.begin() + static_cast<long>(nvars)));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// All monomials of the given weighted degree, in no particular order.
inline std::vector<Monomial> monomials_of_degree(std::span<const int> weights, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = weights.size();
  Monomial cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    if (weights[i] <= 0) throw PreconditionError("monomial enumeration needs positive weights");
    for (int e = 0; e * weights[i] <= remaining; ++e) {
      cur[i] = e;
      rec(i + 1, remaining - e * weights[i]);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  return out;
}

/// Monomial orders used by the Groebner engine.
///
/// WeightedRevLex compares weighted degree first and breaks ties by reverse
/// lexicographic order. Lex is plain lexicographic with x_1 > x_2 > ... .
/// Elimination puts a block of variables first (compared by their total
/// degree) and falls back to weighted reverse lex on the whole monomial; it is
/// the order used whenever a weight-zero auxiliary variable is present.
class MonomialOrder {
 public:
  enum class Kind { WeightedRevLex, Lex, Elimination };

  static MonomialOrder weighted_revlex(std::vector<int> weights) {
    return MonomialOrder(Kind::WeightedRevLex, std::move(weights), {});
  }
  static MonomialOrder lex(std::vector<int> weights) {
    return MonomialOrder(Kind::Lex, std::move(weights), {});
  }
  static MonomialOrder elimination(std::vector<int> weights, std::vector<bool> eliminate) {
    return MonomialOrder(Kind::Elimination, std::move(weights), std::move(eliminate));
  }

  Kind kind() const { return kind_; }
  std::span<const int> weights() const { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case Kind::Elimination: {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (eliminate_[i]) {
            da += a[i];
            db += b[i];
          }
        }
        if (da != db) return da <=> db;
        return revlex(a, b);
      }
      case Kind::WeightedRevLex:
        return revlex(a, b);
    }
    return std::strong_ordering::equal;
  }

  /// Whether variable i belongs to the eliminated block.
  bool eliminates(std::size_t i) const { return kind_ == Kind::Elimination && eliminate_[i]; }

 private:
  MonomialOrder(Kind k, std::vector<int> w, std::vector<bool> e)
      : kind_(k), weights_(std::move(w)), eliminate_(std::move(e)) {}

  std::strong_ordering revlex(const Monomial& a, const Monomial& b) const {
    const int wa = a.weighted_degree(weights_), wb = b.weighted_degree(weights_);
    if (wa != wb) return wa <=> wb;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::vector<int> weights_;
  std::vector<bool> eliminate_;
};

}  // namespace projlat
