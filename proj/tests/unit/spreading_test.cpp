#include <gtest/gtest.h>

#include "combfam/constructions.hpp"
#include "combfam/error.hpp"
#include "combfam/spreading.hpp"
#include "oracles.hpp"

namespace combfam {
namespace {

TEST(Spreading, SpreadRelation) {
  EXPECT_TRUE(is_spread_of(FinSet{1, 2}, FinSet{2, 3}));
  EXPECT_TRUE(is_spread_of(FinSet{1, 2}, FinSet{1, 2}));
  EXPECT_FALSE(is_spread_of(FinSet{2, 3}, FinSet{1, 2}));
  EXPECT_FALSE(is_spread_of(FinSet{1}, FinSet{1, 2}));
  EXPECT_TRUE(is_spread_of(FinSet{}, FinSet{}));
}

TEST(Spreading, DominanceAgreesWithInjectionSearch) {
  for (std::uint64_t a = 0; a < 128; ++a)
    for (std::uint64_t b = 0; b < 128; ++b) {
      const FinSet s = FinSet::from_mask(a), t = FinSet::from_mask(b);
      EXPECT_EQ(is_spread_of(s, t), oracle::spread_by_injection(s, t)) << to_string(s) << " " << to_string(t);
    }
}

TEST(Spreading, CanonicalWitnessFixesIntersection) {
  const SpreadWitness w = canonical_spread_witness(FinSet{1, 3, 4}, FinSet{3, 5, 6});
  EXPECT_EQ(w(3), 3u);
  EXPECT_EQ(w(1), 5u);
  EXPECT_EQ(w(4), 6u);
  EXPECT_EQ(w.image(FinSet{1, 3, 4}), (FinSet{3, 5, 6}));
  for (const auto& [i, j] : w.map) EXPECT_GE(j, i);
  EXPECT_THROW(canonical_spread_witness(FinSet{2}, FinSet{1}), PreconditionError);
}

TEST(Spreading, CanonicalWitnessExistsForEverySpread) {
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const FinSet s = FinSet::from_mask(a), t = FinSet::from_mask(b);
      if (!is_spread_of(s, t)) continue;
      const SpreadWitness w = canonical_spread_witness(s, t);
      EXPECT_EQ(w.image(s), t);
      for (Index i : set_intersection(s, t)) EXPECT_EQ(w(i), i);
      for (const auto& [i, j] : w.map) EXPECT_GE(j, i);
    }
}

TEST(Spreading, SchreierTruncationIsSpreading) {
  const ExplicitFamily s = truncate(schreier(), 6);
  EXPECT_TRUE(is_spreading(s, 6));
  EXPECT_TRUE(oracle::spreading(s, 6));
}

TEST(Spreading, PaperPairIsNotSpreading) {
  const ExplicitFamily f = truncate(remove_sets(cube(2), {FinSet{2, 3}}), 6);
  const auto v = spreading_violation(f, 6);
  ASSERT_TRUE(v.has_value());
  EXPECT_FALSE(f.contains(v->second));
  EXPECT_TRUE(is_spread_of(v->first, v->second));
}

TEST(Spreading, AdjacentRemovedIsNotSpreading) {
  const ExplicitFamily f = truncate(adjacent_pairs_removed(), 6);
  EXPECT_FALSE(is_spreading(f, 6));
}

TEST(Spreading, ClosureIsSpreadingAndMinimal) {
  const ExplicitFamily f(0, 5, {FinSet{}, FinSet{0}, FinSet{1, 2}});
  const ExplicitFamily c = spreading_closure(f);
  EXPECT_TRUE(is_spreading(c, 5));
  EXPECT_TRUE(c.contains(FinSet{3, 4}));
  EXPECT_TRUE(c.contains(FinSet{4}));
  EXPECT_FALSE(c.contains(FinSet{0, 1}));
  EXPECT_EQ(spreading_closure(c), c);
}

TEST(Spreading, ClosureOfHereditaryStaysHereditary) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const ExplicitFamily f = oracle::random_hereditary(rng, 5, 2, 0.4);
    const ExplicitFamily c = spreading_closure(f);
    EXPECT_TRUE(is_hereditary(c));
    EXPECT_TRUE(oracle::spreading(c, 5));
  }
}

}  // namespace
}  // namespace combfam
