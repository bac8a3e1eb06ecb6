#pragma once

#include <string>
#include <vector>

#include "projlat/ideal.hpp"

namespace projlat {

/// V(I) ∩ Proj A, stored through the saturation (I : A_+^∞). Ideals with the
/// same saturation cut the same relevant primes, so the stored ideal is a
/// canonical handle for the locus.
template <Field K>
class ClosedLocus {
 public:
  explicit ClosedLocus(const HomogeneousIdeal<K>& ideal)
      : ideal_(saturate(ideal, HomogeneousIdeal<K>::irrelevant(ideal.ring())).canonical()) {}

  /// V(0), all of Proj A.
  static ClosedLocus whole(const RingPtr<K>& ring) { return ClosedLocus(HomogeneousIdeal<K>::zero(ring)); }
  static ClosedLocus empty(const RingPtr<K>& ring) { return ClosedLocus(HomogeneousIdeal<K>::unit(ring)); }

  const RingPtr<K>& ring() const { return ideal_.ring(); }
  const HomogeneousIdeal<K>& ideal() const { return ideal_; }

  /// Empty iff A_+ ⊆ √I.
  bool is_empty() const {
    const auto& ring = ideal_.ring();
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (!radical_contains(ideal_, Polynomial<K>::variable(ring, i))) return false;
    }
    return true;
  }

  /// V(I) ⊆ V(J) iff J ⊆ √I. Complete because a saturated ideal has no
  /// irrelevant minimal primes.
  bool subset_of(const ClosedLocus& other) const {
    require_same_ring(ring(), other.ring());
    for (const auto& g : other.ideal_.generators()) {
      if (!radical_contains(ideal_, g)) return false;
    }
    return true;
  }

  /// Whether the relevant prime P lies in the locus (P ⊇ I).
  bool contains_point(const HomogeneousIdeal<K>& prime) const { return prime.contains(ideal_); }

  std::string to_string() const {
    if (ideal_.is_unit()) return "V(1)";
    if (ideal_.is_zero()) return "V(0)";
    const std::string gens = ideal_.to_string();
    return "V" + gens;
  }

  friend bool operator==(const ClosedLocus& a, const ClosedLocus& b) {
    return a.subset_of(b) && b.subset_of(a);
  }

 private:
  HomogeneousIdeal<K> ideal_;
};

template <Field K>
ClosedLocus<K> locus_union(const ClosedLocus<K>& a, const ClosedLocus<K>& b) {
  return ClosedLocus<K>(intersect(a.ideal(), b.ideal()));
}

template <Field K>
ClosedLocus<K> locus_intersect(const ClosedLocus<K>& a, const ClosedLocus<K>& b) {
  return ClosedLocus<K>(a.ideal() + b.ideal());
}

/// A finite union of closed loci, i.e. a compact open of the dual topology.
/// Every predicate is decided on the cached single locus V(∩ I_i).
template <Field K>
class ThomasonDatum {
 public:
  ThomasonDatum(RingPtr<K> ring, std::vector<ClosedLocus<K>> components)
      : components_(std::move(components)), locus_(ClosedLocus<K>::empty(ring)) {
    for (const auto& c : components_) {
      require_same_ring(ring, c.ring());
      locus_ = locus_union(locus_, c);
    }
  }

  explicit ThomasonDatum(const ClosedLocus<K>& single) : components_{single}, locus_(single) {}

  static ThomasonDatum empty(const RingPtr<K>& ring) { return ThomasonDatum(ring, {}); }
  static ThomasonDatum whole(const RingPtr<K>& ring) { return ThomasonDatum(ClosedLocus<K>::whole(ring)); }

  const RingPtr<K>& ring() const { return locus_.ring(); }
  const std::vector<ClosedLocus<K>>& components() const { return components_; }
  const ClosedLocus<K>& locus() const { return locus_; }

  bool is_empty() const { return locus_.is_empty(); }
  bool subset_of(const ThomasonDatum& other) const { return locus_.subset_of(other.locus_); }
  bool contains_point(const HomogeneousIdeal<K>& prime) const { return locus_.contains_point(prime); }

  std::string to_string() const {
    if (components_.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += " | ";
      s += components_[i].to_string();
    }
    return s + "}";
  }

  friend bool operator==(const ThomasonDatum& a, const ThomasonDatum& b) { return a.locus_ == b.locus_; }

 private:
  std::vector<ClosedLocus<K>> components_;
  ClosedLocus<K> locus_;
};

template <Field K>
ThomasonDatum<K> thomason_union(const ThomasonDatum<K>& a, const ThomasonDatum<K>& b) {
  auto parts = a.components();
  parts.insert(parts.end(), b.components().begin(), b.components().end());
  return ThomasonDatum<K>(a.ring(), std::move(parts));
}

/// (∪ A_i) ∩ (∪ B_j) = ∪ (A_i ∩ B_j).
template <Field K>
ThomasonDatum<K> thomason_intersect(const ThomasonDatum<K>& a, const ThomasonDatum<K>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ClosedLocus<K>> parts;
  for (const auto& x : a.components()) {
    for (const auto& y : b.components()) parts.push_back(locus_intersect(x, y));
  }
  return ThomasonDatum<K>(a.ring(), std::move(parts));
}

}  // namespace projlat
