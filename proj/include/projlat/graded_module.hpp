#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "projlat/free_module.hpp"
#include "projlat/linalg.hpp"
#include "projlat/locus.hpp"

namespace projlat {

/// A finitely presented graded module
///
///   ⊕_t A(c_t) --φ--> ⊕_s A(d_s) --> M --> 0,
///
/// stored as the row shifts d_s, the column shifts c_t and the columns of φ.
/// Entry (s,t) is zero or homogeneous of degree d_s - c_t. Zero columns are
/// dropped on construction; no columns means M is free, no rows means M = 0.
template <Field K>
class GradedModule {
 public:
  GradedModule(RingPtr<K> ring, std::vector<int> row_shifts, std::vector<int> col_shifts,
               std::vector<Column<K>> columns)
      : ring_(std::move(ring)), rows_(std::move(row_shifts)), cache_(std::make_shared<Cache>()) {
    if (col_shifts.size() != columns.size()) {
      throw ValidationError("expected " + std::to_string(columns.size()) + " column shifts, got " +
                            std::to_string(col_shifts.size()));
    }
    for (std::size_t t = 0; t < columns.size(); ++t) {
      auto& col = columns[t];
      if (col.size() != rows_.size()) {
        throw ValidationError("column " + std::to_string(t + 1) + " has " + std::to_string(col.size()) +
                              " entries, expected " + std::to_string(rows_.size()));
      }
      bool nonzero = false;
      for (std::size_t s = 0; s < col.size(); ++s) {
        require_same_ring(ring_, col[s].ring());
        if (col[s].is_zero()) continue;
        nonzero = true;
        const int want = rows_[s] - col_shifts[t];
        const std::string where = "entry (" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
        if (!col[s].is_homogeneous()) throw ValidationError(where + " = " + col[s].to_string() + " is " + col[s].inhomogeneity());
        const int got = col[s].weighted_degree();
        if (got != want) {
          throw ValidationError(where + " = " + col[s].to_string() + " has degree " + std::to_string(got) +
                                ", expected " + std::to_string(want));
        }
      }
      if (nonzero) {
        cols_.push_back(std::move(col));
        col_shifts_.push_back(col_shifts[t]);
      }
    }
  }

  /// ⊕_s A(d_s).
  static GradedModule free(RingPtr<K> ring, std::vector<int> shifts) {
    return GradedModule(std::move(ring), std::move(shifts), {}, {});
  }

  /// (A/I)(k).
  static GradedModule cyclic(const HomogeneousIdeal<K>& ideal, int shift = 0) {
    std::vector<int> cs;
    std::vector<Column<K>> cols;
    for (const auto& g : ideal.generators()) {
      cs.push_back(shift - g.weighted_degree());
      cols.push_back({g});
    }
    return GradedModule(ideal.ring(), {shift}, std::move(cs), std::move(cols));
  }

  static GradedModule zero(RingPtr<K> ring) { return GradedModule(std::move(ring), {}, {}, {}); }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<int>& row_shifts() const { return rows_; }
  const std::vector<int>& col_shifts() const { return col_shifts_; }
  const std::vector<Column<K>>& columns() const { return cols_; }
  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return cols_.size(); }
  const Polynomial<K>& entry(std::size_t s, std::size_t t) const { return cols_.at(t).at(s); }

  /// Image of φ inside the free cover.
  FreeSubmodule<K> relations() const { return FreeSubmodule<K>(ring_, rows_, cols_); }

  /// Ann(M) = (im φ :_A F); (1) for the zero module. Cached.
  const HomogeneousIdeal<K>& annihilator() const {
    std::call_once(cache_->ann_once, [this] { cache_->ann.emplace(module_colon(relations())); });
    return *cache_->ann;
  }

  std::string to_string() const {
    auto ints = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
      return s + "]";
    };
    std::string s = "coker{shifts:" + ints(rows_) + "; cols:[";
    for (std::size_t t = 0; t < cols_.size(); ++t) s += (t ? ", " : "") + column_string(cols_[t]);
    return s + "]; colshifts:" + ints(col_shifts_) + "}";
  }

 private:
  struct Cache {
    std::once_flag ann_once;
    std::optional<HomogeneousIdeal<K>> ann;
  };

  RingPtr<K> ring_;
  std::vector<int> rows_;
  std::vector<int> col_shifts_;
  std::vector<Column<K>> cols_;
  std::shared_ptr<Cache> cache_;
};

/// M(k): every row and column shift raised by k.
template <Field K>
GradedModule<K> shift(const GradedModule<K>& m, int k) {
  auto rows = m.row_shifts();
  auto cs = m.col_shifts();
  for (int& d : rows) d += k;
  for (int& c : cs) c += k;
  return GradedModule<K>(m.ring(), std::move(rows), std::move(cs), m.columns());
}

template <Field K>
GradedModule<K> direct_sum(const GradedModule<K>& a, const GradedModule<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  auto rows = a.row_shifts();
  rows.insert(rows.end(), b.row_shifts().begin(), b.row_shifts().end());
  auto cs = a.col_shifts();
  cs.insert(cs.end(), b.col_shifts().begin(), b.col_shifts().end());
  std::vector<Column<K>> cols;
  for (const auto& c : a.columns()) {
    auto col = c;
    col.resize(rows.size(), Polynomial<K>::zero(ring));
    cols.push_back(std::move(col));
  }
  for (const auto& c : b.columns()) {
    auto col = zero_column(ring, a.nrows());
    col.insert(col.end(), c.begin(), c.end());
    cols.push_back(std::move(col));
  }
  return GradedModule<K>(ring, std::move(rows), std::move(cs), std::move(cols));
}

/// M ⊗_A N from the cokernel formula: codomain F_0 ⊗ G_0 with relations
/// φ ⊗ 1 and 1 ⊗ ψ. Row (s,u) carries shift d_s + d'_u.
template <Field K>
GradedModule<K> tensor(const GradedModule<K>& m, const GradedModule<K>& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& ring = m.ring();
  const std::size_t nm = m.nrows(), nn = n.nrows();
  auto row = [nn](std::size_t s, std::size_t u) { return s * nn + u; };

  std::vector<int> rows;
  for (int d : m.row_shifts()) {
    for (int e : n.row_shifts()) rows.push_back(d + e);
  }
  std::vector<int> cs;
  std::vector<Column<K>> cols;
  for (std::size_t t = 0; t < m.ncols(); ++t) {
    for (std::size_t u = 0; u < nn; ++u) {
      auto col = zero_column(ring, nm * nn);
      for (std::size_t s = 0; s < nm; ++s) col[row(s, u)] = m.columns()[t][s];
      cols.push_back(std::move(col));
      cs.push_back(m.col_shifts()[t] + n.row_shifts()[u]);
    }
  }
  for (std::size_t v = 0; v < n.ncols(); ++v) {
    for (std::size_t s = 0; s < nm; ++s) {
      auto col = zero_column(ring, nm * nn);
      for (std::size_t u = 0; u < nn; ++u) col[row(s, u)] = n.columns()[v][u];
      cols.push_back(std::move(col));
      cs.push_back(m.row_shifts()[s] + n.col_shifts()[v]);
    }
  }
  return GradedModule<K>(ring, std::move(rows), std::move(cs), std::move(cols));
}

/// Presentation of the submodule of M generated by the images of the given
/// homogeneous columns of the free cover (degrees given explicitly so that
/// zero images are allowed).
template <Field K>
GradedModule<K> submodule_presentation(const GradedModule<K>& m, const std::vector<Column<K>>& gens,
                                       const std::vector<int>& degrees) {
  const auto& ring = m.ring();
  if (gens.empty()) return GradedModule<K>::zero(ring);
  auto rel = relations(m.relations(), gens, degrees);
  std::vector<int> rows;
  for (int d : degrees) rows.push_back(-d);
  std::vector<int> cs;
  for (const auto& col : rel.generators()) cs.push_back(-*column_degree<K>(rows, col));
  return GradedModule<K>(ring, std::move(rows), std::move(cs), rel.generators());
}

namespace detail {

// Generators of M_{≥d}: homogeneous elements of degree at least d of the
// free cover that are minimal under division and nonzero in M.
template <Field K>
std::pair<std::vector<Column<K>>, std::vector<int>> tail_generators(const GradedModule<K>& m, int d) {
  const auto& ring = m.ring();
  const auto& w = ring->weights();
  const int maxw = ring->nvars() ? ring->max_weight() : 1;
  int top = d + maxw - 1;
  for (int ds : m.row_shifts()) top = std::max(top, -ds);

  const FreeSubmodule<K> rel = m.relations();
  std::vector<Column<K>> gens;
  std::vector<int> degrees;
  for (std::size_t s = 0; s < m.nrows(); ++s) {
    const int ds = m.row_shifts()[s];
    for (int deg = std::max(d, -ds); deg <= top; ++deg) {
      for (const auto& mono : monomials_of_degree(w, deg + ds)) {
        bool minimal = true;
        for (std::size_t i = 0; i < mono.size() && minimal; ++i) {
          if (mono[i] > 0 && deg - w[i] >= d) minimal = false;
        }
        if (!minimal) continue;
        auto col = zero_column(ring, m.nrows());
        col[s] = Polynomial<K>::monomial(ring, mono, ring->field().one());
        if (rel.contains(col)) continue;
        gens.push_back(std::move(col));
        degrees.push_back(deg);
      }
    }
  }
  return {std::move(gens), std::move(degrees)};
}

}  // namespace detail

/// The tail M_{≥d} as a module in its own right.
template <Field K>
GradedModule<K> tail(const GradedModule<K>& m, int d) {
  auto [gens, degrees] = detail::tail_generators(m, d);
  return submodule_presentation(m, gens, degrees);
}

/// M / M_{≥d}, presented by the relations of M together with the tail
/// generators.
template <Field K>
GradedModule<K> truncation_quotient(const GradedModule<K>& m, int d) {
  auto [gens, degrees] = detail::tail_generators(m, d);
  auto cols = m.columns();
  auto shifts = m.col_shifts();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    cols.push_back(std::move(gens[i]));
    shifts.push_back(-degrees[i]);
  }
  return GradedModule<K>(m.ring(), m.row_shifts(), std::move(shifts), std::move(cols));
}

/// dim_k M_j: the degree-j slice of the free cover minus the rank of the
/// degree-j block of the relation matrix.
template <Field K>
std::size_t hilbert_dim(const GradedModule<K>& m, int j) {
  const auto& ring = m.ring();
  const auto& w = ring->weights();
  using Key = std::pair<std::size_t, std::vector<int>>;
  auto key = [](std::size_t s, const Monomial& m) { return Key(s, {m.exponents().begin(), m.exponents().end()}); };
  std::map<Key, std::size_t> index;
  for (std::size_t s = 0; s < m.nrows(); ++s) {
    for (const auto& mono : monomials_of_degree(w, j + m.row_shifts()[s])) {
      index.emplace(key(s, mono), index.size());
    }
  }
  const std::size_t dim = index.size();
  if (dim == 0) return 0;

  const K& field = ring->field();
  std::vector<std::vector<typename K::value_type>> rows;
  for (std::size_t t = 0; t < m.ncols(); ++t) {
    for (const auto& mult : monomials_of_degree(w, j + m.col_shifts()[t])) {
      std::vector<typename K::value_type> r(dim, field.zero());
      for (std::size_t s = 0; s < m.nrows(); ++s) {
        for (const auto& [mono, c] : m.columns()[t][s].terms()) {
          r[index.at(key(s, mono * mult))] = c;
        }
      }
      rows.push_back(std::move(r));
    }
  }
  return dim - matrix_rank(field, std::move(rows));
}

/// Ann(M); (1) for M = 0 and (0) for nonzero free modules over a domain.
template <Field K>
HomogeneousIdeal<K> annihilator(const GradedModule<K>& m) {
  return m.annihilator();
}

/// M is torsion iff every variable lies in √Ann(M).
template <Field K>
bool is_torsion(const GradedModule<K>& m) {
  const auto& ann = m.annihilator();
  for (std::size_t i = 0; i < m.ring()->nvars(); ++i) {
    if (!radical_contains(ann, Polynomial<K>::variable(m.ring(), i))) return false;
  }
  return true;
}

namespace detail {

/// Preimage in the free cover of τ(M), i.e. (im φ :_F A_+^∞).
template <Field K>
FreeSubmodule<K> torsion_preimage(const GradedModule<K>& m) {
  if (m.ring()->nvars() == 0) return m.relations();
  return submodule_saturation(m.relations(), HomogeneousIdeal<K>::irrelevant(m.ring()));
}

}  // namespace detail

/// τ(M), the largest torsion submodule, as a presentation of its own.
template <Field K>
GradedModule<K> torsion_submodule(const GradedModule<K>& m) {
  const auto rel = m.relations();
  const auto sat = detail::torsion_preimage(m);
  std::vector<Column<K>> gens;
  std::vector<int> degrees;
  for (const auto& g : sat.generators()) {
    if (rel.contains(g)) continue;
    degrees.push_back(*column_degree<K>(m.row_shifts(), g));
    gens.push_back(g);
  }
  if (gens.empty()) return GradedModule<K>::zero(m.ring());
  return submodule_presentation(m, gens, degrees);
}

/// M/τ(M), presented on the same free cover.
template <Field K>
GradedModule<K> quotient_by_torsion(const GradedModule<K>& m) {
  const auto sat = detail::torsion_preimage(m);
  std::vector<int> cs;
  for (const auto& g : sat.generators()) cs.push_back(-*column_degree<K>(m.row_shifts(), g));
  return GradedModule<K>(m.ring(), m.row_shifts(), std::move(cs), sat.generators());
}

template <Field K>
ClosedLocus<K> support(const GradedModule<K>& m) {
  return ClosedLocus<K>(m.annihilator());
}

/// Checks that P is a relevant prime as far as can be decided cheaply:
/// it must not contain A_+, and a monomial P must be generated by variables.
template <Field K>
void require_relevant_prime(const HomogeneousIdeal<K>& prime) {
  const auto& ring = prime.ring();
  bool all = true;
  for (std::size_t i = 0; i < ring->nvars() && all; ++i) all = prime.contains(Polynomial<K>::variable(ring, i));
  if (all) throw PreconditionError("irrelevant prime");
  if (prime.is_monomial()) {
    for (const auto& g : prime.groebner_basis()) {
      if (g.terms().front().first.total_degree() != 1) {
        throw ValidationError("monomial ideal " + prime.to_string() + " is not prime");
      }
    }
  }
}

/// M_P ≠ 0 iff Ann(M) ⊆ P (M finitely generated).
template <Field K>
bool nonzero_at_prime(const GradedModule<K>& m, const HomogeneousIdeal<K>& prime) {
  require_same_ring(m.ring(), prime.ring());
  require_relevant_prime(prime);
  for (const auto& g : m.annihilator().groebner_basis()) {
    if (!prime.contains(g)) return false;
  }
  return true;
}

}  // namespace projlat
