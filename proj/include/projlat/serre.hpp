#pragma once

#include <string>
#include <vector>

#include "projlat/graded_module.hpp"
#include "projlat/locus.hpp"
#include "projlat/report.hpp"

namespace projlat {

/// A tensor Serre subcategory of qgr A, represented by its support datum:
/// M belongs to it iff supp(M) lies inside the datum. The generating modules
/// are kept for reporting only.
template <Field K>
struct SerreSupport {
  ThomasonDatum<K> datum;
  std::vector<GradedModule<K>> provenance;

  const RingPtr<K>& ring() const { return datum.ring(); }
  std::string to_string() const { return "serre" + datum.to_string(); }
};

/// S ↦ ∪ supp(M) over the generators.
template <Field K>
SerreSupport<K> serre_from_modules(const RingPtr<K>& ring, const std::vector<GradedModule<K>>& mods) {
  std::vector<ClosedLocus<K>> parts;
  for (const auto& m : mods) {
    require_same_ring(ring, m.ring());
    parts.push_back(support(m));
  }
  return SerreSupport<K>{ThomasonDatum<K>(ring, std::move(parts)), mods};
}

/// The class {M : supp(M) ⊆ U}.
template <Field K>
SerreSupport<K> serre_from_datum(const ThomasonDatum<K>& datum) {
  return SerreSupport<K>{datum, {}};
}

template <Field K>
bool serre_contains(const SerreSupport<K>& s, const GradedModule<K>& m) {
  require_same_ring(s.ring(), m.ring());
  return support(m).subset_of(s.datum.locus());
}

template <Field K>
SerreSupport<K> serre_join(const SerreSupport<K>& a, const SerreSupport<K>& b) {
  auto prov = a.provenance;
  prov.insert(prov.end(), b.provenance.begin(), b.provenance.end());
  return SerreSupport<K>{thomason_union(a.datum, b.datum), std::move(prov)};
}

template <Field K>
SerreSupport<K> serre_meet(const SerreSupport<K>& a, const SerreSupport<K>& b) {
  return SerreSupport<K>{thomason_intersect(a.datum, b.datum), {}};
}

/// Whether M lies in S_P = {M : M_P = 0}.
template <Field K>
bool point_prime_membership(const HomogeneousIdeal<K>& prime, const GradedModule<K>& m) {
  return !nonzero_at_prime(m, prime);
}

/// Round-trip report. Localizing subcategories of finite type in QGr A are
/// classified by the same data, so every report also stands for that case.
struct ClassificationReport : Report {
  bool localizing_finite_type = true;
};

namespace detail {

/// Modules A/I and A/I^2 for every component V(I) of the datum.
template <Field K>
std::vector<GradedModule<K>> probe_generators(const ThomasonDatum<K>& u) {
  std::vector<GradedModule<K>> out;
  for (const auto& c : u.components()) {
    out.push_back(GradedModule<K>::cyclic(c.ideal()));
    out.push_back(GradedModule<K>::cyclic(power(c.ideal(), 2)));
  }
  return out;
}

/// A fixed probe family: A, A/A_+, A/(x_i) and A/(x_i x_j).
template <Field K>
std::vector<GradedModule<K>> default_probes(const RingPtr<K>& ring) {
  std::vector<GradedModule<K>> out;
  out.push_back(GradedModule<K>::free(ring, {0}));
  out.push_back(GradedModule<K>::cyclic(HomogeneousIdeal<K>::irrelevant(ring)));
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto xi = Polynomial<K>::variable(ring, i);
    out.push_back(GradedModule<K>::cyclic(HomogeneousIdeal<K>(ring, {xi})));
    for (std::size_t j = i + 1; j < ring->nvars(); ++j) {
      out.push_back(GradedModule<K>::cyclic(HomogeneousIdeal<K>(ring, {xi * Polynomial<K>::variable(ring, j)})));
    }
  }
  return out;
}

}  // namespace detail

/// φ(ψ(U)) = U: the class of modules supported in U, generated by probe
/// modules A/I_i and A/I_i^2, has support datum U again.
template <Field K>
ClassificationReport classification_round_trip_open(const ThomasonDatum<K>& u) {
  ClassificationReport r;
  r.title = "round trip " + u.to_string();
  const auto psi = serre_from_datum(u);
  const auto gens = detail::probe_generators(u);
  for (const auto& g : gens) r.check(serre_contains(psi, g), "probe " + g.to_string() + " lies in psi(U)");
  const auto back = serre_from_modules(u.ring(), gens);
  r.check(back.datum == u, "phi(psi(U)) = U, got " + back.datum.to_string());
  return r;
}

/// ψ(φ(S)) ≡ S: the datum recomputed from the generators matches, and the
/// class regenerated from that datum has the same members on a probe corpus.
template <Field K>
ClassificationReport classification_round_trip(const SerreSupport<K>& s,
                                               std::vector<GradedModule<K>> probes = {}) {
  ClassificationReport r;
  r.title = "round trip " + s.to_string();
  const auto& ring = s.ring();
  if (!s.provenance.empty()) {
    const auto phi = serre_from_modules(ring, s.provenance);
    r.check(phi.datum == s.datum, "phi(S) agrees with the stored datum");
  }
  const auto regenerated = serre_from_modules(ring, detail::probe_generators(s.datum));
  r.check(regenerated.datum == s.datum, "psi(phi(S)) has the datum of S");
  if (probes.empty()) probes = detail::default_probes(ring);
  probes.insert(probes.end(), s.provenance.begin(), s.provenance.end());
  for (const auto& m : probes) {
    r.check(serre_contains(s, m) == serre_contains(regenerated, m), "membership of " + m.to_string() + " agrees");
  }
  return r;
}

}  // namespace projlat
