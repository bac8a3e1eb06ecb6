#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "projlat/error.hpp"

namespace projlat {

/// Coefficient field interface. Elements are plain values; all arithmetic is
/// routed through a field instance so that prime fields can carry a modulus.
template <class K>
concept Field = requires(const K& k, const typename K::value_type& a, long long n) {
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(n) } -> std::same_as<typename K::value_type>;
  { k.add(a, a) } -> std::same_as<typename K::value_type>;
  { k.sub(a, a) } -> std::same_as<typename K::value_type>;
  { k.mul(a, a) } -> std::same_as<typename K::value_type>;
  { k.neg(a) } -> std::same_as<typename K::value_type>;
  { k.inv(a) } -> std::same_as<typename K::value_type>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.name() } -> std::same_as<std::string>;
};

/// The rational numbers, backed by GMP. Values are kept in lowest terms with a
/// positive denominator.
class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const { return value_type(mpz_class(std::to_string(n))); }

  /// Parses decimal numerator/denominator strings (arbitrary length).
  value_type from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ValidationError("zero denominator in rational literal");
    value_type q(n, d);
    q.canonicalize();
    return q;
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw PreconditionError("division by zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  /// True when the value prints without a leading minus sign.
  bool is_positive_form(const value_type& a) const { return sgn(a) >= 0; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Residues modulo a prime p < 2^31, stored in [0, p-1].
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw ValidationError("prime modulus must lie in [2, 2^31)");
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<value_type>(r);
  }
  value_type from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num, 10), d(den, 10), pp(static_cast<unsigned long>(p_));
    mpz_class nr = n % pp, dr = d % pp;
    if (nr < 0) nr += pp;
    if (dr < 0) dr += pp;
    if (dr == 0) throw ValidationError("denominator vanishes modulo " + std::to_string(p_));
    return div(nr.get_ui(), dr.get_ui());
  }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw PreconditionError("division by zero");
    // Fermat: a^(p-2)
    value_type result = 1, base = a;
    std::uint64_t e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_positive_form(value_type) const { return true; }

  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);

}  // namespace projlat
