#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "projlat/graded_module.hpp"
#include "projlat/report.hpp"

namespace projlat {

/// Subsets of a finite point set as bitmasks (at most 31 points).
using PointSet = std::uint32_t;

/// A finite T0 space, given by its specialization order: x ≤ y iff y lies in
/// the closure of x. Opens are the down-sets (closed under generization).
class FiniteSpectralSpace {
 public:
  FiniteSpectralSpace(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {
    const std::size_t n = labels_.size();
    if (n > 31) throw PreconditionError("finite spaces are limited to 31 points");
    if (leq_.size() != n) throw StructuralError("order matrix does not match the point count");
    for (const auto& row : leq_) {
      if (row.size() != n) throw StructuralError("order matrix is not square");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq_[a][a]) throw ValidationError("specialization order is not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a]) throw ValidationError("space is not T0: order is not antisymmetric");
        for (std::size_t c = 0; c < n; ++c) {
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw ValidationError("specialization order is not transitive");
        }
      }
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  PointSet all() const { return size() == 0 ? 0 : static_cast<PointSet>((std::uint64_t{1} << size()) - 1); }

  /// cl{x} = ↑x.
  PointSet closure(std::size_t x) const {
    PointSet s = 0;
    for (std::size_t y = 0; y < size(); ++y) {
      if (leq_[x][y]) s |= PointSet{1} << y;
    }
    return s;
  }

  /// ↓x, the smallest open containing x.
  PointSet generizations(std::size_t x) const {
    PointSet s = 0;
    for (std::size_t y = 0; y < size(); ++y) {
      if (leq_[y][x]) s |= PointSet{1} << y;
    }
    return s;
  }

  bool is_open(PointSet u) const {
    for (std::size_t x = 0; x < size(); ++x) {
      if ((u >> x & 1) && (generizations(x) & ~u)) return false;
    }
    return true;
  }

  /// All opens in increasing mask order.
  std::vector<PointSet> opens() const {
    std::vector<PointSet> out;
    const std::uint64_t limit = std::uint64_t{1} << size();
    for (std::uint64_t m = 0; m < limit; ++m) {
      if (is_open(static_cast<PointSet>(m))) out.push_back(static_cast<PointSet>(m));
    }
    return out;
  }

  std::string describe(PointSet s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t x = 0; x < size(); ++x) {
      if (!(s >> x & 1)) continue;
      if (!first) out += ", ";
      out += labels_[x];
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const FiniteSpectralSpace&, const FiniteSpectralSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

/// Same points with the order reversed: the opens of X* are the
/// specialization-closed subsets of X.
inline FiniteSpectralSpace hochster_dual(const FiniteSpectralSpace& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = x.leq(b, a);
  }
  return FiniteSpectralSpace(x.labels(), std::move(leq));
}

/// Points (x_i : i ∈ S) for every proper subset S of the variables, ordered
/// by inclusion. Point index equals the mask S.
template <Field K>
FiniteSpectralSpace monomial_proj_model(const GradedRing<K>& ring) {
  const std::size_t n = ring.nvars();
  if (n > 4) throw PreconditionError("monomial models are limited to 4 variables");
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count));
  for (std::size_t s = 0; s < count; ++s) {
    std::string l;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) l += (l.empty() ? "" : ",") + ring.names()[i];
    }
    labels.push_back("(" + (l.empty() ? std::string("0") : l) + ")");
    for (std::size_t t = 0; t < count; ++t) leq[s][t] = (s & t) == s;
  }
  return FiniteSpectralSpace(std::move(labels), std::move(leq));
}

/// The monomial prime with variable mask `s`.
template <Field K>
HomogeneousIdeal<K> monomial_prime(const RingPtr<K>& ring, std::size_t s) {
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (s >> i & 1) gens.push_back(Polynomial<K>::variable(ring, i));
  }
  return HomogeneousIdeal<K>(ring, std::move(gens));
}

/// A finite lattice with a multiplication, given by explicit tables.
struct FiniteIdealLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> product;

  std::size_t size() const { return labels.size(); }

  std::size_t top() const {
    for (std::size_t a = 0; a < size(); ++a) {
      bool is_top = true;
      for (std::size_t b = 0; b < size() && is_top; ++b) is_top = leq[b][a];
      if (is_top) return a;
    }
    throw StructuralError("lattice has no top element");
  }

  std::size_t bottom() const {
    for (std::size_t a = 0; a < size(); ++a) {
      bool is_bottom = true;
      for (std::size_t b = 0; b < size() && is_bottom; ++b) is_bottom = leq[a][b];
      if (is_bottom) return a;
    }
    throw StructuralError("lattice has no bottom element");
  }
};

/// L1 through L5 (plus associativity and commutativity of the product),
/// checked over all pairs and triples. In a finite lattice every element is
/// compact, so L2 and L5 reduce to the tables being total.
inline Report check_ideal_lattice_axioms(const FiniteIdealLattice& l) {
  Report r;
  r.title = "L1-L5";
  const std::size_t n = l.size();
  r.check(n > 0, "lattice is non-empty");
  if (n == 0) return r;
  auto name = [&](std::size_t a) { return l.labels[a]; };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t j = l.join[a][b], m = l.meet[a][b];
      bool lub = l.leq[a][j] && l.leq[b][j];
      bool glb = l.leq[m][a] && l.leq[m][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq[a][c] && l.leq[b][c] && !l.leq[j][c]) lub = false;
        if (l.leq[c][a] && l.leq[c][b] && !l.leq[c][m]) glb = false;
      }
      r.check(lub, [&] { return std::string("L1: join of " + name(a) + " and " + name(b) + " is the least upper bound"); });
      r.check(glb, [&] { return std::string("L1: meet of " + name(a) + " and " + name(b) + " is the greatest lower bound"); });
    }
  }
  std::size_t top = 0;
  bool has_top = true;
  try {
    top = l.top();
    l.bottom();
  } catch (const StructuralError&) {
    has_top = false;
  }
  r.check(has_top, "L1: top and bottom exist");
  r.check(true, "L2: every element of a finite lattice is compact, so L is compactly generated");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      r.check(l.product[a][b] < n, [&] { return std::string("L5: product of compacts " + name(a) + ", " + name(b) + " is an element"); });
      r.check(l.product[a][b] == l.product[b][a], [&] { return std::string("product is commutative on " + name(a) + ", " + name(b)); });
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = l.product[a][l.join[b][c]];
        const std::size_t rhs = l.join[l.product[a][b]][l.product[a][c]];
        r.check(lhs == rhs, [&] { return std::string("L3: " + name(a) + "(" + name(b) + " v " + name(c) + ") distributes"); });
        const std::size_t lhs2 = l.product[l.join[b][c]][a];
        const std::size_t rhs2 = l.join[l.product[b][a]][l.product[c][a]];
        r.check(lhs2 == rhs2, [&] { return std::string("L3: (" + name(b) + " v " + name(c) + ")" + name(a) + " distributes"); });
        r.check(l.product[l.product[a][b]][c] == l.product[a][l.product[b][c]], [&] { return std::string("product is associative on " + name(a) + ", " + name(b) + ", " + name(c)); });
      }
    }
    if (has_top) {
      r.check(l.product[top][a] == a && l.product[a][top] == a, [&] { return std::string("L4: 1*" + name(a) + " = " + name(a) + " = " + name(a) + "*1"); });
    }
  }
  return r;
}

/// L_open(X): opens under inclusion with UV = U ∩ V. Element i of the result
/// corresponds to `opens()[i]`.
inline FiniteIdealLattice open_lattice(const FiniteSpectralSpace& x, std::vector<PointSet>* masks = nullptr) {
  const auto opens = x.opens();
  const std::size_t n = opens.size();
  auto index_of = [&](PointSet s) {
    return static_cast<std::size_t>(std::lower_bound(opens.begin(), opens.end(), s) - opens.begin());
  };
  FiniteIdealLattice l;
  l.leq.assign(n, std::vector<bool>(n));
  l.join.assign(n, std::vector<std::size_t>(n));
  l.meet.assign(n, std::vector<std::size_t>(n));
  l.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    l.labels.push_back(x.describe(opens[a]));
    for (std::size_t b = 0; b < n; ++b) {
      l.leq[a][b] = (opens[a] & ~opens[b]) == 0;
      l.join[a][b] = index_of(opens[a] | opens[b]);
      l.meet[a][b] = index_of(opens[a] & opens[b]);
      l.product[a][b] = l.meet[a][b];
    }
  }
  const auto axioms = check_ideal_lattice_axioms(l);
  if (!axioms.passed()) throw StructuralError("open lattice violates " + axioms.failures.front());
  if (masks) *masks = opens;
  return l;
}

/// Prime elements p ≠ 1: ab ≤ p implies a ≤ p or b ≤ p.
inline std::vector<std::size_t> prime_elements(const FiniteIdealLattice& l) {
  std::vector<std::size_t> out;
  const std::size_t top = l.top();
  for (std::size_t p = 0; p < l.size(); ++p) {
    if (p == top) continue;
    bool prime = true;
    for (std::size_t a = 0; a < l.size() && prime; ++a) {
      for (std::size_t b = 0; b < l.size() && prime; ++b) {
        if (l.leq[l.product[a][b]][p] && !l.leq[a][p] && !l.leq[b][p]) prime = false;
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

/// Spec L with closed sets V(a) = {p : a ≤ p}. The specialization order on
/// Spec L is the lattice order restricted to primes. Point i of the result is
/// `prime_elements(l)[i]`; the closed-set family is verified to coincide with
/// the up-sets of that order.
inline FiniteSpectralSpace spec_of_lattice(const FiniteIdealLattice& l) {
  const auto primes = prime_elements(l);
  const std::size_t n = primes.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(l.labels[primes[i]]);
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = l.leq[primes[i]][primes[j]];
  }
  FiniteSpectralSpace spec(std::move(labels), std::move(leq));

  std::vector<PointSet> closed;
  for (std::size_t a = 0; a < l.size(); ++a) {
    PointSet v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (l.leq[a][primes[i]]) v |= PointSet{1} << i;
    }
    closed.push_back(v);
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  std::vector<PointSet> upsets;
  for (PointSet u : hochster_dual(spec).opens()) upsets.push_back(u);
  if (closed != upsets) throw StructuralError("V(a) family of Spec L does not match its specialization order");
  return spec;
}

/// x ↦ X ∖ cl{x} is a homeomorphism X → Spec L_open(X).
inline Report soberification_check(const FiniteSpectralSpace& x) {
  Report r;
  r.title = "soberification";
  std::vector<PointSet> masks;
  const auto l = open_lattice(x, &masks);
  const auto primes = prime_elements(l);
  const auto spec = spec_of_lattice(l);

  std::vector<std::size_t> image(x.size());
  std::vector<bool> hit(primes.size(), false);
  for (std::size_t p = 0; p < x.size(); ++p) {
    const PointSet u = x.all() & ~x.closure(p);
    const auto it = std::lower_bound(masks.begin(), masks.end(), u);
    const bool is_open = it != masks.end() && *it == u;
    r.check(is_open, [&] { return std::string("X minus cl{" + x.labels()[p] + "} is open"); });
    if (!is_open) return r;
    const std::size_t elem = static_cast<std::size_t>(it - masks.begin());
    const auto pos = std::find(primes.begin(), primes.end(), elem);
    r.check(pos != primes.end(), [&] { return std::string("X minus cl{" + x.labels()[p] + "} is a prime element"); });
    if (pos == primes.end()) return r;
    image[p] = static_cast<std::size_t>(pos - primes.begin());
    r.check(!hit[image[p]], [&] { return std::string("map is injective at " + x.labels()[p]); });
    hit[image[p]] = true;
  }
  r.check(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "map is surjective onto Spec");

  auto forward = [&](PointSet u) {
    PointSet v = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (u >> p & 1) v |= PointSet{1} << image[p];
    }
    return v;
  };
  const auto spec_opens = spec.opens();
  for (PointSet u : x.opens()) {
    const PointSet v = forward(u);
    r.check(std::find(spec_opens.begin(), spec_opens.end(), v) != spec_opens.end(), [&] { return std::string("image of open " + x.describe(u) + " is open"); });
  }
  for (PointSet v : spec_opens) {
    PointSet u = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (v >> image[p] & 1) u |= PointSet{1} << p;
    }
    r.check(x.is_open(u), [&] { return std::string("preimage of open " + spec.describe(v) + " is open"); });
  }
  return r;
}

/// Duality, the L1-L5 axioms and soberification for X and X*.
struct SpectralChecks {
  Report duality{"duality"};
  Report axioms{"L1-L5"};
  Report soberification{"soberification"};

  Report total() const {
    Report r{"spectral"};
    r.merge(duality);
    r.merge(axioms);
    r.merge(soberification);
    return r;
  }
};

inline SpectralChecks spectral_space_checks(const FiniteSpectralSpace& x) {
  SpectralChecks out;
  const auto dual = hochster_dual(x);
  out.duality.check(hochster_dual(dual) == x, "(X*)* = X");
  // For a finite space the dual-opens are exactly the closed sets of X.
  auto closed = x.opens();
  for (auto& u : closed) u = x.all() & ~u;
  std::sort(closed.begin(), closed.end());
  out.duality.check(closed == dual.opens(), "opens of X* are the closed sets of X");
  for (const auto* space : {&x, &dual}) {
    out.axioms.merge(check_ideal_lattice_axioms(open_lattice(*space)));
    out.soberification.merge(soberification_check(*space));
  }
  return out;
}

/// Exhaustive check of the classification on the monomial model of Proj A:
/// every dual-open U is recovered as the union of supports of the test
/// modules supported inside U, and P ↦ S_P hits exactly the prime elements
/// of L_open(X*). Test modules are A/P for every model point, A/A_+ and
/// A/(product of variables) for every non-empty set of variables.
template <Field K>
Report exhaustive_classification_check(const RingPtr<K>& ring) {
  Report r;
  r.title = "classification";
  const std::size_t n = ring->nvars();
  if (n > 4) throw PreconditionError("exhaustive classification is limited to 4 variables");
  const auto model = monomial_proj_model(*ring);
  const auto dual = hochster_dual(model);
  const std::size_t npts = model.size();

  std::vector<HomogeneousIdeal<K>> points;
  for (std::size_t s = 0; s < npts; ++s) points.push_back(monomial_prime(ring, s));

  std::vector<GradedModule<K>> family;
  for (std::size_t s = 0; s < npts; ++s) family.push_back(GradedModule<K>::cyclic(points[s]));
  family.push_back(GradedModule<K>::cyclic(HomogeneousIdeal<K>::irrelevant(ring)));
  for (std::size_t t = 1; t < (std::size_t{1} << n); ++t) {
    auto prod = Polynomial<K>::one(ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (t >> i & 1) prod = prod * Polynomial<K>::variable(ring, i);
    }
    family.push_back(GradedModule<K>::cyclic(HomogeneousIdeal<K>(ring, {prod})));
  }

  // Supports restricted to the model, computed symbolically and cross-checked
  // against the localization criterion Ann(M) ⊆ P.
  std::vector<PointSet> supp;
  for (const auto& m : family) {
    const auto locus = support(m);
    PointSet s = 0;
    for (std::size_t p = 0; p < npts; ++p) {
      const bool in = locus.contains_point(points[p]);
      r.check(in == nonzero_at_prime(m, points[p]), [&] { return std::string("support of " + m.to_string() + " at " + model.labels()[p]); });
      if (in) s |= PointSet{1} << p;
    }
    r.check(dual.is_open(s), [&] { return std::string("support of " + m.to_string() + " is a dual-open"); });
    supp.push_back(s);
  }

  std::vector<PointSet> dual_masks;
  const auto dual_lattice = open_lattice(dual, &dual_masks);
  for (PointSet u : dual_masks) {
    PointSet back = 0;
    for (PointSet s : supp) {
      if ((s & ~u) == 0) back |= s;
    }
    r.check(back == u, [&] { return std::string("phi(psi(U)) = U for U = " + model.describe(u)); });
  }

  const auto primes = prime_elements(dual_lattice);
  std::vector<std::size_t> hit;
  for (std::size_t p = 0; p < npts; ++p) {
    PointSet u = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(supp[i] >> p & 1)) u |= supp[i];
    }
    r.check(u == (model.all() & ~model.generizations(p)), [&] { return std::string("S_" + model.labels()[p] + " has datum X minus its generizations"); });
    const auto it = std::lower_bound(dual_masks.begin(), dual_masks.end(), u);
    const bool found = it != dual_masks.end() && *it == u;
    r.check(found, [&] { return std::string("datum of S_" + model.labels()[p] + " is a dual-open"); });
    if (found) hit.push_back(static_cast<std::size_t>(it - dual_masks.begin()));
  }
  std::sort(hit.begin(), hit.end());
  const bool distinct = std::adjacent_find(hit.begin(), hit.end()) == hit.end();
  r.check(distinct && hit == primes, "P -> S_P is a bijection onto the prime elements");
  return r;
}

/// Everything the finite tier verifies for the model with n variables.
struct FiniteVerification {
  std::size_t n = 0;
  SpectralChecks spectral;
  Report classification{"classification"};

  Report total() const {
    Report r{"finite n=" + std::to_string(n)};
    r.merge(spectral.total());
    r.merge(classification);
    return r;
  }
  bool passed() const { return total().passed(); }
};

inline FiniteVerification finite_verify(std::size_t n) {
  if (n < 1 || n > 4) throw PreconditionError("finite verification needs 1 <= n <= 4");
  static const std::vector<std::string> names = {"x", "y", "z", "w"};
  auto ring = make_rational_ring(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(n)));
  FiniteVerification v;
  v.n = n;
  v.spectral = spectral_space_checks(monomial_proj_model(*ring));
  v.classification = exhaustive_classification_check(ring);
  return v;
}

}  // namespace projlat
