#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "projlat/ideal.hpp"

namespace projlat {

/// An element of a free module ⊕_s A(d_s), one polynomial per summand.
template <Field K>
using Column = std::vector<Polynomial<K>>;

/// Graded degree of a column in ⊕_s A(d_s): entry s of a column of degree e
/// is homogeneous of weighted degree e + d_s. Returns nullopt for the zero
/// column and throws when the column is not homogeneous.
template <Field K>
std::optional<int> column_degree(const std::vector<int>& shifts, const Column<K>& col) {
  if (col.size() != shifts.size()) throw StructuralError("column length does not match the ambient rank");
  std::optional<int> deg;
  for (std::size_t s = 0; s < col.size(); ++s) {
    for (const auto& [m, c] : col[s].terms()) {
      const int d = col[s].term_degree(m) - shifts[s];
      if (deg && *deg != d) throw ValidationError("column is not homogeneous");
      deg = d;
    }
  }
  return deg;
}

template <Field K>
Column<K> zero_column(const RingPtr<K>& ring, std::size_t n) {
  return Column<K>(n, Polynomial<K>::zero(ring));
}

/// Basis vector e_s of the rank-n free module.
template <Field K>
Column<K> unit_column(const RingPtr<K>& ring, std::size_t n, std::size_t s) {
  auto c = zero_column(ring, n);
  c[s] = Polynomial<K>::one(ring);
  return c;
}

template <Field K>
std::string column_string(const Column<K>& col) {
  std::string s = "[";
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (i) s += ", ";
    s += col[i].to_string();
  }
  return s + "]";
}

namespace detail {

/// Graded term-over-position order on ⊕_s A(d_s), optionally stacked in
/// elimination blocks.
inline ModuleOrder graded_module_order(const std::vector<int>& weights, const std::vector<int>& shifts,
                                       std::vector<int> blocks = {}) {
  std::vector<int> offset;
  for (int d : shifts) offset.push_back(-d);
  if (blocks.empty()) blocks.assign(shifts.size(), 0);
  return ModuleOrder{MonomialOrder::weighted_revlex(weights), std::move(offset), std::move(blocks), true};
}

template <Field K>
ModuleVector<K> column_to_vector(const Column<K>& col, int first_comp = 0) {
  ModuleVector<K> v;
  for (std::size_t s = 0; s < col.size(); ++s) {
    for (const auto& [m, c] : col[s].terms()) v.push_back(ModuleTerm<K>{first_comp + static_cast<int>(s), m, c});
  }
  return v;
}

template <Field K>
Column<K> vector_to_column(const RingPtr<K>& ring, const ModuleVector<K>& v, int first_comp, std::size_t n) {
  std::vector<std::vector<typename Polynomial<K>::Term>> parts(n);
  for (const auto& t : v) {
    const int s = t.comp - first_comp;
    if (s < 0 || s >= static_cast<int>(n)) throw StructuralError("module term outside the requested block");
    parts[static_cast<std::size_t>(s)].emplace_back(t.mono, t.coef);
  }
  Column<K> col;
  for (auto& p : parts) col.emplace_back(ring, std::move(p));
  return col;
}

}  // namespace detail

/// Submodule of ⊕_s A(d_s) generated by homogeneous columns. Its reduced
/// Groebner basis (graded term-over-position order) is cached on first use.
template <Field K>
class FreeSubmodule {
 public:
  FreeSubmodule(RingPtr<K> ring, std::vector<int> ambient_shifts, std::vector<Column<K>> generators)
      : ring_(std::move(ring)), shifts_(std::move(ambient_shifts)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      for (const auto& e : g) require_same_ring(ring_, e.ring());
      if (column_degree<K>(shifts_, g)) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<int>& ambient_shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<Column<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Column<K>>& groebner_basis() const {
    std::call_once(cache_->once, [this] {
      GroebnerEngine<K> engine = make_engine();
      std::vector<ModuleVector<K>> vs;
      for (const auto& g : gens_) vs.push_back(to_sorted(engine, g));
      for (const auto& v : engine.groebner(vs)) {
        cache_->basis.push_back(detail::vector_to_column(ring_, v, 0, rank()));
      }
    });
    return cache_->basis;
  }

  Column<K> normal_form(const Column<K>& col) const {
    GroebnerEngine<K> engine = make_engine();
    std::vector<ModuleVector<K>> bs;
    for (const auto& b : groebner_basis()) bs.push_back(to_sorted(engine, b));
    return detail::vector_to_column(ring_, engine.reduce(to_sorted(engine, col), bs), 0, rank());
  }

  bool contains(const Column<K>& col) const {
    for (const auto& e : normal_form(col)) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  bool contains(const FreeSubmodule& other) const {
    for (const auto& g : other.gens_) {
      if (!contains(g)) return false;
    }
    return true;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Column<K>> basis;
  };

  GroebnerEngine<K> make_engine() const {
    return GroebnerEngine<K>(ring_->field(), detail::graded_module_order(ring_->weights(), shifts_));
  }

  static ModuleVector<K> to_sorted(const GroebnerEngine<K>& engine, const Column<K>& col) {
    auto v = detail::column_to_vector(col);
    engine.canonicalize(v);
    return v;
  }

  RingPtr<K> ring_;
  std::vector<int> shifts_;
  std::vector<Column<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Relations among images modulo N: generators of
///   { a ∈ ⊕_i A(-δ_i) : Σ a_i g_i ∈ N },
/// where g_i is homogeneous of degree δ_i (or zero). Computed by eliminating
/// the ambient block from the module generated by (g_i; ε_i) and (n_j; 0).
template <Field K>
FreeSubmodule<K> relations(const FreeSubmodule<K>& N, const std::vector<Column<K>>& images,
                           const std::vector<int>& image_degrees) {
  const auto& ring = N.ring();
  const std::size_t n = N.rank();
  const std::size_t r = images.size();
  if (image_degrees.size() != r) throw StructuralError("one degree per image is required");
  std::vector<int> source_shifts;
  for (int d : image_degrees) source_shifts.push_back(-d);
  for (std::size_t i = 0; i < r; ++i) {
    const auto deg = column_degree<K>(N.ambient_shifts(), images[i]);
    if (deg && *deg != image_degrees[i]) throw ValidationError("image degree does not match its declared degree");
  }

  std::vector<int> shifts = N.ambient_shifts();
  shifts.insert(shifts.end(), source_shifts.begin(), source_shifts.end());
  std::vector<int> blocks(n, 1);
  blocks.resize(n + r, 0);
  GroebnerEngine<K> engine(ring->field(), detail::graded_module_order(ring->weights(), shifts, blocks));

  std::vector<ModuleVector<K>> gens;
  for (std::size_t i = 0; i < r; ++i) {
    auto v = detail::column_to_vector(images[i]);
    v.push_back(ModuleTerm<K>{static_cast<int>(n + i), Monomial(ring->nvars()), ring->field().one()});
    engine.canonicalize(v);
    gens.push_back(std::move(v));
  }
  for (const auto& g : N.generators()) {
    auto v = detail::column_to_vector(g);
    engine.canonicalize(v);
    gens.push_back(std::move(v));
  }

  std::vector<Column<K>> rels;
  for (const auto& v : engine.groebner(gens)) {
    if (v.front().comp >= static_cast<int>(n)) {
      rels.push_back(detail::vector_to_column(ring, v, static_cast<int>(n), r));
    }
  }
  return FreeSubmodule<K>(ring, std::move(source_shifts), std::move(rels));
}

/// (N : e_s) = { a ∈ A : a·e_s ∈ N }.
template <Field K>
HomogeneousIdeal<K> component_colon(const FreeSubmodule<K>& N, std::size_t s) {
  const auto& ring = N.ring();
  auto rel = relations(N, {unit_column(ring, N.rank(), s)}, {-N.ambient_shifts()[s]});
  std::vector<Polynomial<K>> gens;
  for (const auto& col : rel.generators()) gens.push_back(col[0]);
  return HomogeneousIdeal<K>(ring, std::move(gens));
}

/// (N :_A F) = { a : a·F ⊆ N } = ∩_s (N : e_s); the unit ideal for rank 0.
template <Field K>
HomogeneousIdeal<K> module_colon(const FreeSubmodule<K>& N) {
  const auto& ring = N.ring();
  std::optional<HomogeneousIdeal<K>> acc;
  for (std::size_t s = 0; s < N.rank(); ++s) {
    auto c = component_colon(N, s);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? acc->canonical() : HomogeneousIdeal<K>::unit(ring);
}

/// (N :_F J) = { v ∈ F : J·v ⊆ N }, as the kernel of F → (F/N)^k sending v
/// to (g_1 v, ..., g_k v) for the generators g_j of J.
template <Field K>
FreeSubmodule<K> submodule_colon(const FreeSubmodule<K>& N, const HomogeneousIdeal<K>& J) {
  require_same_ring(N.ring(), J.ring());
  if (J.is_zero()) throw PreconditionError("colon by zero ideal");
  const auto& ring = N.ring();
  const std::size_t n = N.rank();
  const auto& gens = J.generators();
  const std::size_t k = gens.size();

  std::vector<int> target_shifts;
  for (std::size_t j = 0; j < k; ++j) {
    for (int d : N.ambient_shifts()) target_shifts.push_back(d + gens[j].weighted_degree());
  }
  std::vector<Column<K>> target_gens;
  for (std::size_t j = 0; j < k; ++j) {
    for (const auto& g : N.generators()) {
      auto col = zero_column(ring, n * k);
      for (std::size_t s = 0; s < n; ++s) col[j * n + s] = g[s];
      target_gens.push_back(std::move(col));
    }
  }
  FreeSubmodule<K> target(ring, target_shifts, std::move(target_gens));

  std::vector<Column<K>> images;
  std::vector<int> degrees;
  for (std::size_t s = 0; s < n; ++s) {
    auto col = zero_column(ring, n * k);
    for (std::size_t j = 0; j < k; ++j) col[j * n + s] = gens[j];
    images.push_back(std::move(col));
    degrees.push_back(-N.ambient_shifts()[s]);
  }
  auto rel = relations(target, images, degrees);
  return FreeSubmodule<K>(ring, N.ambient_shifts(), rel.generators());
}

/// (N :_F J^∞), iterating submodule_colon until it stabilizes.
template <Field K>
FreeSubmodule<K> submodule_saturation(const FreeSubmodule<K>& N, const HomogeneousIdeal<K>& J) {
  FreeSubmodule<K> current = N;
  for (;;) {
    FreeSubmodule<K> next = submodule_colon(current, J);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

}  // namespace projlat
