#include <gtest/gtest.h>

#include <random>

#include "projlat/sections.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/printers.hpp"

using namespace projlat;
using Q = Rationals;
using S = Section<Q>;
using oracle::ideal_of;

namespace {

RingPtr<Q> xy() {
  static const auto ring = make_rational_ring({"x", "y"});
  return ring;
}

Polynomial<Q> p(const std::string& s, const RingPtr<Q>& ring = xy()) { return parse_polynomial(ring, s); }

/// Dehomogenization at x = 1: g / x^k ↦ g(1, y), as a dense coefficient list
/// in y. Independent of the section arithmetic.
std::vector<mpq_class> dehomogenize(const S& s) {
  std::vector<mpq_class> out;
  for (const auto& [m, c] : s.numerator().terms()) {
    const std::size_t e = static_cast<std::size_t>(m[1]);
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

S random_section(std::mt19937& rng) {
  std::uniform_int_distribution<int> kd(0, 4);
  const unsigned k = static_cast<unsigned>(kd(rng));
  return S(p("x"), oracle::random_homogeneous(xy(), rng, static_cast<int>(k), 3, 5), k);
}

}  // namespace

TEST(Sections, Arithmetic) {
  const auto yx = S(p("x"), p("y"), 1);
  const auto xx = S(p("x"), p("x"), 1);
  const auto prod = yx * xx;
  EXPECT_TRUE(section_eq(prod, yx));
  const auto zero = S(p("x"), Polynomial<Q>::zero(xy()), 0);
  EXPECT_TRUE(section_eq(yx + zero, yx));
  const auto sq = yx * yx;
  EXPECT_EQ(sq.numerator(), p("y^2"));
  EXPECT_EQ(sq.power(), 2u);
}

TEST(Sections, Equality) {
  const auto one = S(p("x"), Polynomial<Q>::one(xy()), 0);
  EXPECT_TRUE(section_eq(S(p("x"), p("x"), 1), one));
  EXPECT_FALSE(section_eq(S(p("x"), p("y"), 1), one));

  const auto ambient = ideal_of(xy(), {"x*y"});
  const auto lhs = S(p("x"), p("y"), 1, ambient);
  const auto rhs = S(p("x"), Polynomial<Q>::zero(xy()), 0, ambient);
  EXPECT_TRUE(section_eq(lhs, rhs));
  // Oracle: x·y ∈ (xy), so y is killed after one multiplication by x.
  EXPECT_TRUE(ambient.contains(p("x") * p("y")));
}

TEST(Sections, Validation) {
  EXPECT_THROW(S(p("x"), p("y^2"), 1), ValidationError);
  EXPECT_THROW(S(Polynomial<Q>::one(xy()), Polynomial<Q>::one(xy()), 0), ValidationError);
  EXPECT_THROW(S(p("x + y^2"), p("y"), 1), ValidationError);
  const auto a = S(p("x"), p("y"), 1);
  const auto b = S(p("y"), p("x"), 1);
  EXPECT_THROW(a + b, PreconditionError);
  EXPECT_THROW(a * S(p("x"), p("y"), 1, ideal_of(xy(), {"x*y"})), PreconditionError);
}

TEST(Sections, Restriction) {
  const auto s = S(p("x"), p("y"), 1);
  const auto r = restrict(s, p("y"));
  EXPECT_EQ(r.locus(), p("x*y"));
  EXPECT_TRUE(section_eq(r, S(p("x*y"), p("y^2"), 1)));
  const auto same = restrict(s, Polynomial<Q>::one(xy()));
  EXPECT_TRUE(section_eq(same, s));
  EXPECT_THROW(restrict(s, Polynomial<Q>::zero(xy())), PreconditionError);
  EXPECT_THROW(restrict(S(p("x"), p("y"), 1, ideal_of(xy(), {"x*y"})), p("y")), PreconditionError);

  auto xyz = make_rational_ring({"x", "y", "z"});
  const auto t = S(p("x", xyz), p("y + z", xyz), 1);
  const auto twice = restrict(restrict(t, p("y", xyz)), p("z", xyz));
  const auto once = restrict(t, p("y*z", xyz));
  EXPECT_TRUE(section_eq(twice, once));
}

TEST(Sections, Germs) {
  const auto zero_prime = HomogeneousIdeal<Q>::zero(xy());
  const auto s = S(p("x"), p("y"), 1);
  const auto t = S(p("x*y"), p("y^2"), 1);
  EXPECT_TRUE(germ_eq(s, t, zero_prime));
  EXPECT_FALSE(germ_eq(s, S(p("x"), Polynomial<Q>::one(xy()), 0), zero_prime));
  EXPECT_TRUE(germ_eq(s, s, ideal_of(xy(), {"y"})));
  try {
    germ_eq(s, t, ideal_of(xy(), {"y"}));
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "section not defined at P");
  }
  EXPECT_THROW(germ_eq(s, s, HomogeneousIdeal<Q>::irrelevant(xy())), PreconditionError);

  // In A/(xy) the germ of y/x at (y) vanishes, but differs from 1 there.
  const auto ambient = ideal_of(xy(), {"x*y"});
  const auto a = S(p("x"), p("y"), 1, ambient);
  const auto zero = S(p("x"), Polynomial<Q>::zero(xy()), 0, ambient);
  const auto one = S(p("x"), Polynomial<Q>::one(xy()), 0, ambient);
  EXPECT_TRUE(germ_eq(a, zero, ideal_of(xy(), {"y"})));
  EXPECT_FALSE(germ_eq(one, zero, ideal_of(xy(), {"y"})));
}

TEST(Properties, RingAxioms) {
  std::mt19937 rng(77);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_section(rng), b = random_section(rng), c = random_section(rng);
    EXPECT_TRUE(section_eq((a + b) + c, a + (b + c)));
    EXPECT_TRUE(section_eq((a * b) * c, a * (b * c)));
    EXPECT_TRUE(section_eq(a + b, b + a));
    EXPECT_TRUE(section_eq(a * b, b * a));
    EXPECT_TRUE(section_eq(a * (b + c), a * b + a * c));
    EXPECT_TRUE(section_eq(a + (-a), S(p("x"), Polynomial<Q>::zero(xy()), 0)));
    EXPECT_TRUE(section_eq(a * S(p("x"), Polynomial<Q>::one(xy()), 0), a));
  }
}

TEST(Properties, RestrictionIsHomomorphism) {
  std::mt19937 rng(78);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_section(rng), b = random_section(rng);
    const auto h = p(i % 2 ? "y" : "x + y");
    EXPECT_TRUE(section_eq(restrict(a * b, h), restrict(a, h) * restrict(b, h)));
    EXPECT_TRUE(section_eq(restrict(a + b, h), restrict(a, h) + restrict(b, h)));
    EXPECT_TRUE(section_eq(restrict(restrict(a, h), p("y")), restrict(a, h * p("y"))));
  }
}

TEST(Properties, PolynomialsInYOverX) {
  std::mt19937 rng(79);
  for (int i = 0; i < 50; ++i) {
    const auto s = random_section(rng);
    const auto d = dehomogenize(s);
    // Normal form: x does not divide the numerator, so the power equals the
    // degree of the dehomogenized polynomial in y/x.
    if (!s.numerator().is_zero()) {
      EXPECT_FALSE(exact_quotient(s.numerator(), p("x")).has_value());
      EXPECT_EQ(s.power() + 1, d.size());
    } else {
      EXPECT_TRUE(d.empty());
    }
    const auto t = random_section(rng);
    EXPECT_EQ(section_eq(s, t), dehomogenize(s) == dehomogenize(t));
    if (!s.numerator().is_zero() && !t.numerator().is_zero()) {
      EXPECT_EQ(dehomogenize(s * t).size() + 1, d.size() + dehomogenize(t).size());
    }
  }
}
