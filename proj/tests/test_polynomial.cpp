#include <gtest/gtest.h>

#include <random>

#include "projlat/script/expr.hpp"

using namespace projlat;

namespace {

RingPtr<Rationals> qq(std::vector<std::string> names, std::vector<int> weights = {}) {
  return make_rational_ring(std::move(names), std::move(weights));
}

template <Field K>
Polynomial<K> random_polynomial(const RingPtr<K>& ring, std::mt19937& rng, int max_exp, int max_terms) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5), nt(0, max_terms);
  std::vector<typename Polynomial<K>::Term> ts;
  const int count = nt(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<int> ex(ring->nvars());
    for (auto& x : ex) x = e(rng);
    ts.emplace_back(Monomial(ex), ring->field().from_int(c(rng)));
  }
  return Polynomial<K>(ring, ts);
}

}  // namespace

TEST(PolynomialArithmetic, AdditiveInverse) {
  auto A = qq({"x", "y"});
  auto x = parse_polynomial(A, "x");
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_TRUE((x - x).is_zero());
}

TEST(PolynomialArithmetic, DifferenceOfSquares) {
  auto A = qq({"x", "y"});
  EXPECT_EQ(parse_polynomial(A, "(x+y)*(x-y)"), parse_polynomial(A, "x^2 - y^2"));
}

TEST(PolynomialArithmetic, FrobeniusInCharacteristicTwo) {
  auto A = make_ring(PrimeField(2), {"x", "y"}, {1, 1});
  auto f = parse_polynomial(A, "x + y");
  EXPECT_EQ(f * f, parse_polynomial(A, "x^2 + y^2"));
  EXPECT_EQ((f * f).to_string(), "x^2 + y^2");
}

TEST(PolynomialArithmetic, RationalCoefficientsStayReduced) {
  auto A = qq({"x"});
  auto f = parse_polynomial(A, "2/4*x + 3/6");
  EXPECT_EQ(f.to_string(), "1/2*x + 1/2");
  EXPECT_EQ(parse_polynomial(A, "-6/2").to_string(), "-3");
}

TEST(PolynomialArithmetic, PrimeResiduesAreReduced) {
  auto A = make_ring(PrimeField(7), {"x"}, {1});
  EXPECT_EQ(parse_polynomial(A, "10*x - 8").to_string(), "3*x + 6");
  EXPECT_EQ(parse_polynomial(A, "1/3*x").to_string(), "5*x");
}

TEST(PolynomialArithmetic, RingMismatchIsStructural) {
  auto A = qq({"x", "y"});
  auto B = qq({"x", "z"});
  EXPECT_THROW(parse_polynomial(A, "x") + parse_polynomial(B, "x"), StructuralError);
  // Structurally equal rings are interchangeable.
  auto C = qq({"x", "y"});
  EXPECT_NO_THROW(parse_polynomial(A, "x") + parse_polynomial(C, "y"));
}

TEST(WeightedDegree, ReadsWeights) {
  auto A = qq({"x", "y"});
  EXPECT_EQ(parse_polynomial(A, "x^2*y").weighted_degree(), 3);
  auto B = qq({"x", "y", "z"}, {1, 1, 2});
  EXPECT_EQ(parse_polynomial(B, "z").weighted_degree(), 2);
  auto f = parse_polynomial(B, "x*z + y^3");
  EXPECT_EQ(f.weighted_degree(), 3);
  EXPECT_TRUE(f.is_homogeneous());
}

TEST(WeightedDegree, ZeroIsUndefined) {
  auto A = qq({"x", "y"});
  EXPECT_THROW(Polynomial<Rationals>::zero(A).weighted_degree(), DegreeUndefined);
}

TEST(Homogeneity, Components) {
  auto A = qq({"x", "y"});
  EXPECT_TRUE(parse_polynomial(A, "x^2 - y^2").is_homogeneous());

  auto B = qq({"x", "z"}, {1, 2});
  auto f = parse_polynomial(B, "x + z");
  EXPECT_FALSE(f.is_homogeneous());
  auto parts = f.homogeneous_components();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 1);
  EXPECT_EQ(parts[0].second, parse_polynomial(B, "x"));
  EXPECT_EQ(parts[1].first, 2);
  EXPECT_EQ(parts[1].second, parse_polynomial(B, "z"));

  auto zero = Polynomial<Rationals>::zero(B);
  EXPECT_TRUE(zero.is_homogeneous());
  EXPECT_TRUE(zero.homogeneous_components().empty());
}

TEST(Rendering, DescendingCanonicalOrder) {
  auto A = qq({"x", "y", "z"}, {1, 1, 2});
  auto f = parse_polynomial(A, "1 + y + x*z + z + y^3");
  EXPECT_EQ(f.to_string(), "y^3 + x*z + z + y + 1");
}

TEST(ExactQuotient, DividesOrReportsFailure) {
  auto A = qq({"x", "y"});
  auto q = exact_quotient(parse_polynomial(A, "x^2 - y^2"), parse_polynomial(A, "x + y"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, parse_polynomial(A, "x - y"));
  EXPECT_FALSE(exact_quotient(parse_polynomial(A, "x^2 + y^2"), parse_polynomial(A, "x + y")).has_value());
}

TEST(PolynomialProperties, ProductDegreeIsAdditiveForHomogeneous) {
  auto A = qq({"x", "y", "z"}, {1, 2, 3});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(A, rng, 3, 4);
    auto g = random_polynomial(A, rng, 3, 4);
    for (const auto& [df, pf] : f.homogeneous_components()) {
      for (const auto& [dg, pg] : g.homogeneous_components()) {
        auto prod = pf * pg;
        if (prod.is_zero()) continue;
        EXPECT_TRUE(prod.is_homogeneous());
        EXPECT_EQ(prod.weighted_degree(), df + dg);
      }
    }
  }
}

TEST(PolynomialProperties, ComponentsResumToOriginal) {
  auto A = qq({"x", "y", "z"}, {1, 1, 2});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_polynomial(A, rng, 4, 6);
    auto sum = Polynomial<Rationals>::zero(A);
    for (const auto& [d, part] : f.homogeneous_components()) {
      EXPECT_TRUE(part.is_homogeneous());
      EXPECT_EQ(part.weighted_degree(), d);
      sum = sum + part;
    }
    EXPECT_EQ(sum, f);
  }
}

TEST(PolynomialProperties, RationalArithmeticIsExact) {
  auto A = qq({"x", "y"});
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_polynomial(A, rng, 3, 5).scaled(mpq_class(1, 3));
    auto g = random_polynomial(A, rng, 3, 5).scaled(mpq_class(2, 7));
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(f * g, g * f);
  }
}

TEST(PolynomialProperties, RenderingReparses) {
  auto A = qq({"x", "y", "z"}, {1, 1, 2});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(A, rng, 3, 5).scaled(mpq_class(-5, 3));
    EXPECT_EQ(parse_polynomial(A, f.to_string()), f) << f.to_string();
  }
}
