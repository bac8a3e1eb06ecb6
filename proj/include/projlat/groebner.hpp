#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdlib>
#include <tuple>
#include <string>
#include <vector>

#include "projlat/error.hpp"
#include "projlat/field.hpp"
#include "projlat/monomial.hpp"

namespace projlat {

inline constexpr std::size_t kDefaultBasisCap = 10000;

namespace detail {
inline std::atomic<std::size_t>& basis_cap_slot() {
  static std::atomic<std::size_t> cap = [] {
    if (const char* env = std::getenv("PROJLAT_GB_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBasisCap;
  }();
  return cap;
}
}  // namespace detail

/// Maximum number of basis elements before Buchberger gives up with
/// BasisCapExceeded. Initialized from PROJLAT_GB_CAP when set.
inline std::size_t basis_cap() { return detail::basis_cap_slot().load(); }
inline void set_basis_cap(std::size_t cap) { detail::basis_cap_slot().store(cap == 0 ? kDefaultBasisCap : cap); }

/// Order on terms m*e_c of a free module.
///
/// Components are first compared by `block` (a larger block dominates; this
/// is how submodule elimination is expressed). Inside a block, with
/// `degree_first` set, the graded degree wdeg(m) + offset[c] is compared
/// before the monomial order; ties go to the lower component index.
struct ModuleOrder {
  MonomialOrder monomial;
  std::vector<int> offset;
  std::vector<int> block;
  bool degree_first = false;

  static ModuleOrder for_ideal(MonomialOrder m) { return ModuleOrder{std::move(m), {0}, {0}, false}; }

  std::strong_ordering compare(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
    if (block[ca] != block[cb]) return block[ca] <=> block[cb];
    if (degree_first) {
      const int da = ma.weighted_degree(monomial.weights()) + offset[ca];
      const int db = mb.weighted_degree(monomial.weights()) + offset[cb];
      if (da != db) return da <=> db;
    }
    const auto c = monomial.compare(ma, mb);
    if (c != 0) return c;
    return cb <=> ca;
  }
};

template <Field K>
struct ModuleTerm {
  int comp;
  Monomial mono;
  typename K::value_type coef;
};

/// Terms strictly descending in the engine's ModuleOrder.
template <Field K>
using ModuleVector = std::vector<ModuleTerm<K>>;

/// Buchberger completion over a free module, with normal forms.
///
/// Pair selection uses the sugar strategy. Pairs are pruned with the
/// Gebauer-Moeller update; the coprime leading-term criterion applies only to
/// rank-one (ideal) computations. Output bases are reduced and monic, sorted
/// ascending by leading term, so they are deterministic for a fixed order.
template <Field K>
class GroebnerEngine {
 public:
  using value_type = typename K::value_type;
  using Vector = ModuleVector<K>;

  GroebnerEngine(K field, ModuleOrder order, std::size_t cap = basis_cap())
      : field_(std::move(field)), order_(std::move(order)), cap_(cap) {}

  const ModuleOrder& order() const { return order_; }
  const K& field() const { return field_; }

  /// Sorts descending and merges equal terms.
  void canonicalize(Vector& v) const {
    std::sort(v.begin(), v.end(), [&](const ModuleTerm<K>& a, const ModuleTerm<K>& b) {
      return order_.compare(a.comp, a.mono, b.comp, b.mono) > 0;
    });
    Vector out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coef = field_.add(out.back().coef, t.coef);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coef)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coef)) out.pop_back();
    v = std::move(out);
  }

  /// Full reduction of f modulo `basis` (not necessarily a Groebner basis).
  Vector reduce(Vector f, const std::vector<Vector>& basis) const {
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Vector* divisor = nullptr;
      for (const auto& g : basis) {
        if (g.front().comp == f[pos].comp && g.front().mono.divides(f[pos].mono)) {
          divisor = &g;
          break;
        }
      }
      if (!divisor) {
        ++pos;
        continue;
      }
      const auto& lead = divisor->front();
      const value_type q = field_.mul(f[pos].coef, field_.inv(lead.coef));
      f = subtract_multiple(f, q, f[pos].mono / lead.mono, *divisor);
    }
    return f;
  }

  std::vector<Vector> groebner(const std::vector<Vector>& generators) const {
    std::vector<Vector> basis;
    std::vector<int> sugar;
    std::vector<Pair> pairs;

    auto insert = [&](Vector h, int h_sugar) {
      make_monic(h);
      const std::size_t k = basis.size();
      update_pairs(pairs, basis, h, h_sugar, sugar, k);
      basis.push_back(std::move(h));
      sugar.push_back(h_sugar);
      if (basis.size() > cap_) throw BasisCapExceeded(cap_);
    };

    for (const auto& g : generators) {
      if (g.empty()) continue;
      Vector h = reduce(g, basis);
      if (!h.empty()) insert(std::move(h), vector_sugar(g));
    }

    while (!pairs.empty()) {
      auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        const auto c = order_.compare(a.comp, a.lcm, b.comp, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair p = *best;
      pairs.erase(best);
      Vector s = s_vector(basis[p.i], basis[p.j], p.lcm);
      Vector h = reduce(std::move(s), basis);
      if (!h.empty()) insert(std::move(h), p.sugar);
    }
    return interreduce(std::move(basis));
  }

 private:
  struct Pair {
    std::size_t i, j;
    int comp;
    Monomial lcm;
    int sugar;
  };

  int sugar_degree(const Monomial& m) const {
    int d = 0;
    const auto w = order_.monomial.weights();
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * (w[i] > 0 ? w[i] : 1);
    return d;
  }

  int vector_sugar(const Vector& v) const {
    int s = 0;
    bool first = true;
    for (const auto& t : v) {
      const int d = sugar_degree(t.mono) + order_.offset[t.comp];
      s = first ? d : std::max(s, d);
      first = false;
    }
    return s;
  }

  bool rank_one() const { return order_.offset.size() == 1; }

  void update_pairs(std::vector<Pair>& pairs, const std::vector<Vector>& basis, const Vector& h, int h_sugar,
                    const std::vector<int>& sugar, std::size_t k) const {
    const auto& hl = h.front();
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& gl = basis[i].front();
      if (gl.comp != hl.comp) continue;
      Monomial l = Monomial::lcm(gl.mono, hl.mono);
      const int s = std::max(sugar[i] + sugar_degree(l / gl.mono), h_sugar + sugar_degree(l / hl.mono));
      fresh.push_back(Pair{i, k, hl.comp, std::move(l), s});
      coprime.push_back(rank_one() && gl.mono.coprime(hl.mono));
    }

    // Drop a new pair whose lcm is properly divisible by another new lcm.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Among equal lcms keep one; if any of them is coprime, drop the group.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool group_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          group_coprime = group_coprime || coprime[b];
          keep[b] = false;
        }
      }
      if (group_coprime) keep[a] = false;
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.comp != hl.comp || !hl.mono.divides(p.lcm)) return false;
      const Monomial li = Monomial::lcm(basis[p.i].front().mono, hl.mono);
      const Monomial lj = Monomial::lcm(basis[p.j].front().mono, hl.mono);
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (keep[a]) pairs.push_back(std::move(fresh[a]));
    }
  }

  Vector s_vector(const Vector& f, const Vector& g, const Monomial& lcm) const {
    Vector a = multiply(f, field_.one(), lcm / f.front().mono);
    const value_type q = field_.mul(f.front().coef, field_.inv(g.front().coef));
    return subtract_multiple(a, q, lcm / g.front().mono, g);
  }

  Vector multiply(const Vector& v, const value_type& c, const Monomial& m) const {
    Vector out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(ModuleTerm<K>{t.comp, t.mono * m, field_.mul(t.coef, c)});
    return out;
  }

  /// f - c * m * g, both sorted.
  Vector subtract_multiple(const Vector& f, const value_type& c, const Monomial& m, const Vector& g) const {
    Vector out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      ModuleTerm<K> gt{g[j].comp, g[j].mono * m, field_.neg(field_.mul(g[j].coef, c))};
      if (i == f.size()) {
        out.push_back(std::move(gt));
        ++j;
        continue;
      }
      const auto cmp = order_.compare(f[i].comp, f[i].mono, gt.comp, gt.mono);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back(std::move(gt));
        ++j;
      } else {
        value_type s = field_.add(f[i].coef, gt.coef);
        if (!field_.is_zero(s)) out.push_back(ModuleTerm<K>{f[i].comp, f[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void make_monic(Vector& v) const {
    if (v.empty() || field_.is_one(v.front().coef)) return;
    const value_type inv = field_.inv(v.front().coef);
    for (auto& t : v) t.coef = field_.mul(t.coef, inv);
  }

  std::vector<Vector> interreduce(std::vector<Vector> basis) const {
    std::vector<bool> redundant_flags(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& li = basis[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& lj = basis[j].front();
        if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
        // Equal leading terms: keep the earliest.
        redundant = !(lj.mono == li.mono) || j < i;
      }
      redundant_flags[i] = redundant;
    }
    std::vector<Vector> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!redundant_flags[i]) minimal.push_back(std::move(basis[i]));
    }
    std::vector<Vector> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Vector> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Vector tail(minimal[i].begin() + 1, minimal[i].end());
      Vector r = reduce(std::move(tail), others);
      r.insert(r.begin(), minimal[i].front());
      make_monic(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Vector& a, const Vector& b) {
      return order_.compare(a.front().comp, a.front().mono, b.front().comp, b.front().mono) < 0;
    });
    return reduced;
  }

  K field_;
  ModuleOrder order_;
  std::size_t cap_;
};

}  // namespace projlat
