#include <gtest/gtest.h>

#include "projlat/serre.hpp"
#include "support/corpus.hpp"
#include "support/printers.hpp"

using namespace projlat;
using Q = Rationals;
using Module = GradedModule<Q>;
using oracle::cyclic_of;
using oracle::ideal_of;

namespace {

RingPtr<Q> xy() {
  static const auto ring = make_rational_ring({"x", "y"});
  return ring;
}

RingPtr<Q> xyz() {
  static const auto ring = make_rational_ring({"x", "y", "z"});
  return ring;
}

ThomasonDatum<Q> datum(const RingPtr<Q>& ring, std::vector<std::vector<const char*>> parts) {
  std::vector<ClosedLocus<Q>> loci;
  for (const auto& gens : parts) {
    std::vector<Polynomial<Q>> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial(ring, g));
    loci.emplace_back(HomogeneousIdeal<Q>(ring, ps));
  }
  return ThomasonDatum<Q>(ring, loci);
}

}  // namespace

TEST(Serre, FromModules) {
  auto ring = xy();
  auto whole = serre_from_modules(ring, {Module::free(ring, {0})});
  EXPECT_EQ(whole.datum, ThomasonDatum<Q>::whole(ring));
  auto tors = serre_from_modules(ring, {cyclic_of(ring, {"x", "y"})});
  EXPECT_TRUE(tors.datum.is_empty());
  auto s = serre_from_modules(ring, {cyclic_of(ring, {"x^2", "x*y"}), cyclic_of(ring, {"y"})});
  EXPECT_EQ(s.datum.locus().ideal(), ideal_of(ring, {"x*y"}));
  EXPECT_EQ(s.provenance.size(), 2u);
}

TEST(Serre, Contains) {
  auto ring = xy();
  auto sx = serre_from_modules(ring, {cyclic_of(ring, {"x^2", "x*y"})});
  EXPECT_TRUE(serre_contains(sx, cyclic_of(ring, {"x"})));
  EXPECT_FALSE(serre_contains(serre_from_modules(ring, {cyclic_of(ring, {"x"})}), cyclic_of(ring, {"y"})));
  auto empty = serre_from_datum(ThomasonDatum<Q>::empty(ring));
  for (const auto& [name, m] : oracle::module_corpus_xy(ring)) {
    if (is_torsion(m)) {
      EXPECT_TRUE(serre_contains(empty, m)) << name;
      EXPECT_TRUE(serre_contains(sx, m)) << name;
    }
  }
}

TEST(Serre, JoinMeet) {
  auto ring = xy();
  auto a = serre_from_modules(ring, {cyclic_of(ring, {"x"})});
  auto b = serre_from_modules(ring, {cyclic_of(ring, {"y"})});
  EXPECT_EQ(serre_join(a, a).datum, a.datum);
  EXPECT_EQ(serre_meet(a, a).datum, a.datum);
  EXPECT_EQ(serre_join(a, b).datum, serre_from_modules(ring, {cyclic_of(ring, {"x*y"})}).datum);
  EXPECT_TRUE(serre_meet(a, b).datum.is_empty());
}

TEST(Serre, PointPrimes) {
  auto ring = xy();
  auto ax = cyclic_of(ring, {"x"});
  EXPECT_TRUE(point_prime_membership(ideal_of(ring, {"y"}), ax));
  EXPECT_FALSE(point_prime_membership(ideal_of(ring, {"x"}), ax));
  auto sq = cyclic_of(ring, {"x^2", "x*y", "y^2"});
  for (const char* p : {"x", "y"}) EXPECT_TRUE(point_prime_membership(ideal_of(ring, {p}), sq));
  EXPECT_TRUE(point_prime_membership(HomogeneousIdeal<Q>::zero(ring), sq));
  EXPECT_THROW(point_prime_membership(HomogeneousIdeal<Q>::irrelevant(ring), ax), PreconditionError);
}

TEST(Classification, RoundTripExamples) {
  auto ring = xy();
  auto r1 = classification_round_trip_open(datum(ring, {{"x"}}));
  EXPECT_TRUE(r1.passed()) << (r1.failures.empty() ? "" : r1.failures.front());
  EXPECT_TRUE(r1.localizing_finite_type);
  EXPECT_TRUE(classification_round_trip_open(ThomasonDatum<Q>::empty(ring)).passed());
  EXPECT_TRUE(classification_round_trip_open(ThomasonDatum<Q>::whole(ring)).passed());
  auto s = serre_from_modules(ring, {cyclic_of(ring, {"x^2", "x*y"}), cyclic_of(ring, {"y"})});
  auto r2 = classification_round_trip(s);
  EXPECT_TRUE(r2.passed()) << (r2.failures.empty() ? "" : r2.failures.front());
}

TEST(Classification, RoundTripCorpus) {
  std::vector<ThomasonDatum<Q>> data;
  auto a = xy();
  auto b = xyz();
  for (auto parts : std::vector<std::vector<std::vector<const char*>>>{
           {}, {{"x"}}, {{"y"}}, {{"x"}, {"y"}}, {{"x*y"}}, {{"x^2", "x*y"}}, {{"x - y"}}, {{"x^2 + y^2"}},
           {{"x", "y"}}, {{"0"}}, {{"x^3 - y^3"}, {"x"}}, {{"x*y*(x - y)"}}}) {
    data.push_back(datum(a, parts));
  }
  for (auto parts : std::vector<std::vector<std::vector<const char*>>>{
           {}, {{"x"}}, {{"x", "y"}}, {{"x"}, {"y", "z"}}, {{"x*y*z"}}, {{"x*y", "z"}}, {{"x^2 - y*z"}},
           {{"x", "y", "z"}}, {{"x - y", "z"}}, {{"x"}, {"y"}, {"z"}}, {{"y^2", "x*z"}}, {{"z"}},
           {{"x*z", "y*z"}}}) {
    data.push_back(datum(b, parts));
  }
  ASSERT_EQ(data.size(), 25u);
  for (const auto& u : data) {
    auto r = classification_round_trip_open(u);
    EXPECT_TRUE(r.passed()) << u.to_string() << ": " << (r.failures.empty() ? "" : r.failures.front());
    auto s = classification_round_trip(serre_from_datum(u));
    EXPECT_TRUE(s.passed()) << u.to_string() << ": " << (s.failures.empty() ? "" : s.failures.front());
  }
}

TEST(Properties, ShiftAndTensorClosure) {
  auto ring = xy();
  const auto corpus = oracle::module_corpus_xy(ring);
  const std::vector<SerreSupport<Q>> classes = {
      serre_from_modules(ring, {cyclic_of(ring, {"x"})}),
      serre_from_modules(ring, {cyclic_of(ring, {"x*y"})}),
      serre_from_modules(ring, {cyclic_of(ring, {"x", "y"})}),
      serre_from_modules(ring, {cyclic_of(ring, {"x - y"})}),
  };
  for (const auto& s : classes) {
    for (const auto& [name, m] : corpus) {
      if (!serre_contains(s, m)) continue;
      for (int k : {-2, 1, 3}) EXPECT_TRUE(serre_contains(s, shift(m, k))) << name;
      for (const auto& other : corpus) EXPECT_TRUE(serre_contains(s, tensor(m, other.module))) << name;
    }
  }
}

TEST(Properties, Monotonicity) {
  auto ring = xy();
  const auto corpus = oracle::module_corpus_xy(ring);
  for (const auto& m : corpus) {
    const auto s = serre_from_modules(ring, {m.module});
    EXPECT_TRUE(serre_contains(s, m.module)) << m.name;
    for (const auto& n : corpus) {
      if (support(n.module).subset_of(support(m.module))) EXPECT_TRUE(serre_contains(s, n.module)) << n.name;
    }
  }
}
