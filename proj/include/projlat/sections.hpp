#pragma once

#include <optional>
#include <string>

#include "projlat/graded_module.hpp"

namespace projlat {

/// An element g / f^k of the degree-zero localization A_(f), the ring of
/// sections over the basic open D(f). With an ambient ideal I the ring is
/// (A/I)_(f) instead.
template <Field K>
class Section {
 public:
  Section(Polynomial<K> f, Polynomial<K> g, unsigned k, std::optional<HomogeneousIdeal<K>> ambient = std::nullopt)
      : f_(std::move(f)), g_(std::move(g)), k_(k), ambient_(std::move(ambient)) {
    require_same_ring(f_.ring(), g_.ring());
    if (ambient_) require_same_ring(f_.ring(), ambient_->ring());
    if (f_.is_zero() || !f_.is_homogeneous() || f_.weighted_degree() < 1) {
      throw ValidationError("basic open needs a nonzero homogeneous f of positive degree, got " + f_.to_string());
    }
    if (!g_.is_zero()) {
      if (!g_.is_homogeneous()) throw ValidationError("numerator " + g_.to_string() + " is " + g_.inhomogeneity());
      const int want = static_cast<int>(k_) * f_.weighted_degree();
      if (g_.weighted_degree() != want) {
        throw ValidationError("numerator " + g_.to_string() + " has degree " + std::to_string(g_.weighted_degree()) +
                              ", expected " + std::to_string(want) + " = " + std::to_string(k_) + "*deg(" +
                              f_.to_string() + ")");
      }
    }
    normalize();
  }

  const Polynomial<K>& locus() const { return f_; }
  const Polynomial<K>& numerator() const { return g_; }
  unsigned power() const { return k_; }
  const std::optional<HomogeneousIdeal<K>>& ambient() const { return ambient_; }
  const RingPtr<K>& ring() const { return f_.ring(); }

  std::string to_string() const {
    std::string s = "(" + g_.to_string() + ")/(" + f_.to_string() + ")^" + std::to_string(k_);
    if (ambient_ && !ambient_->is_zero()) s += " mod " + ambient_->to_string();
    return s;
  }

 private:
  // Reduces modulo the ambient ideal and cancels powers of f while possible.
  void normalize() {
    if (ambient_ && !ambient_->is_zero()) g_ = ambient_->normal_form(g_);
    while (k_ > 0 && !g_.is_zero()) {
      auto q = exact_quotient(g_, f_);
      if (!q) break;
      g_ = std::move(*q);
      --k_;
      if (ambient_ && !ambient_->is_zero()) g_ = ambient_->normal_form(g_);
    }
    if (g_.is_zero()) k_ = 0;
  }

  Polynomial<K> f_;
  Polynomial<K> g_;
  unsigned k_;
  std::optional<HomogeneousIdeal<K>> ambient_;
};

namespace detail {

template <Field K>
bool same_ambient(const Section<K>& a, const Section<K>& b) {
  const bool za = !a.ambient() || a.ambient()->is_zero();
  const bool zb = !b.ambient() || b.ambient()->is_zero();
  if (za || zb) return za && zb;
  return *a.ambient() == *b.ambient();
}

template <Field K>
void require_compatible(const Section<K>& a, const Section<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (!detail::same_ambient(a, b)) throw PreconditionError("sections live over different ambient rings");
  if (!(a.locus() == b.locus())) {
    throw PreconditionError("sections live on different basic opens D(" + a.locus().to_string() + ") and D(" +
                            b.locus().to_string() + ")");
  }
}

template <Field K>
bool ambient_is_zero(const Section<K>& s) {
  return !s.ambient() || s.ambient()->is_zero();
}

// g1 f^k2 - g2 f^k1, the numerator of s - t over f^(k1+k2).
template <Field K>
Polynomial<K> cross_difference(const Section<K>& s, const Section<K>& t) {
  return s.numerator() * s.locus().pow(t.power()) - t.numerator() * t.locus().pow(s.power());
}

}  // namespace detail

template <Field K>
Section<K> operator+(const Section<K>& s, const Section<K>& t) {
  detail::require_compatible(s, t);
  const auto& f = s.locus();
  return Section<K>(f, s.numerator() * f.pow(t.power()) + t.numerator() * f.pow(s.power()), s.power() + t.power(),
                    s.ambient());
}

template <Field K>
Section<K> operator*(const Section<K>& s, const Section<K>& t) {
  detail::require_compatible(s, t);
  return Section<K>(s.locus(), s.numerator() * t.numerator(), s.power() + t.power(), s.ambient());
}

template <Field K>
Section<K> operator-(const Section<K>& s) {
  return Section<K>(s.locus(), -s.numerator(), s.power(), s.ambient());
}

/// Equality in A_(f): f^m (g1 f^k2 - g2 f^k1) ∈ I for some m. Over the
/// polynomial ring (a domain) this is plain cross-multiplication.
template <Field K>
bool section_eq(const Section<K>& s, const Section<K>& t) {
  detail::require_compatible(s, t);
  const auto diff = detail::cross_difference(s, t);
  if (detail::ambient_is_zero(s)) return diff.is_zero();
  const auto sat = saturate(*s.ambient(), HomogeneousIdeal<K>(s.ring(), {s.locus()}));
  return sat.contains(diff);
}

/// The restriction A_(f) → A_(fh): g/f^k ↦ g h^k / (fh)^k.
template <Field K>
Section<K> restrict(const Section<K>& s, const Polynomial<K>& h) {
  require_same_ring(s.ring(), h.ring());
  const auto fh = s.locus() * h;
  const bool empty = fh.is_zero() || (!detail::ambient_is_zero(s) && s.ambient()->contains(fh));
  if (empty) throw PreconditionError("empty basic open target");
  return Section<K>(fh, s.numerator() * h.pow(s.power()), s.power(), s.ambient());
}

/// Equality of germs at the relevant prime P. Both sections are moved to
/// D(fg); they agree at P when u·(difference) ∈ I for some u ∉ P. The
/// candidates for u are powers of f·g·h_P, where h_P is the product of the
/// variables outside P, so the test is complete for monomial P.
template <Field K>
bool germ_eq(const Section<K>& s, const Section<K>& t, const HomogeneousIdeal<K>& prime) {
  require_same_ring(s.ring(), t.ring());
  require_same_ring(s.ring(), prime.ring());
  if (!detail::same_ambient(s, t)) throw PreconditionError("sections live over different ambient rings");
  require_relevant_prime(prime);
  if (prime.contains(s.locus()) || prime.contains(t.locus())) throw PreconditionError("section not defined at P");
  const auto rs = restrict(s, t.locus());
  const auto rt = restrict(t, s.locus());
  const auto diff = detail::cross_difference(rs, rt);
  if (detail::ambient_is_zero(s)) return diff.is_zero();
  const auto& ring = s.ring();
  auto u = s.locus() * t.locus();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto xi = Polynomial<K>::variable(ring, i);
    if (!prime.contains(xi)) u = u * xi;
  }
  const auto sat = saturate(*s.ambient(), HomogeneousIdeal<K>(ring, {u}));
  return sat.contains(diff);
}

}  // namespace projlat
