#include <gtest/gtest.h>

#include "combfam/constructions.hpp"
#include "combfam/error.hpp"
#include "combfam/extension_set.hpp"
#include "combfam/lazy_family.hpp"
#include "combfam/ordinal.hpp"
#include "oracles.hpp"

namespace combfam {
namespace {

TEST(Ordinal, TextForms) {
  EXPECT_EQ(to_string(OrdinalW2::of(7)), "7");
  EXPECT_EQ(to_string(OrdinalW2::omega(1)), "w");
  EXPECT_EQ(to_string(OrdinalW2{2, 3}), "w*2+3");
  EXPECT_EQ(to_string(OrdinalW2{1, 1}), "w+1");
  for (const char* t : {"0", "5", "w", "w+1", "w*2", "w*3+4"}) EXPECT_EQ(to_string(parse_ordinal(t)), t);
  EXPECT_EQ(parse_ordinal("omega"), OrdinalW2::omega(1));
}

TEST(Ordinal, OrderAndDerivative) {
  EXPECT_LT(OrdinalW2::of(100), OrdinalW2::omega(1));
  EXPECT_LT(OrdinalW2::omega(1), (OrdinalW2{1, 1}));
  EXPECT_EQ(OrdinalW2::of(3).after_derivative(), OrdinalW2::of(2));
  EXPECT_EQ(OrdinalW2::omega(1).after_derivative(), OrdinalW2::omega(1));
}

TEST(ExtensionSet, CanonicalForm) {
  const ExtensionSet e = ExtensionSet::cofinite(FinSet{1}, 3);
  EXPECT_EQ(to_string(e), "{1} + [3..)");
  EXPECT_TRUE(e.contains(1));
  EXPECT_FALSE(e.contains(2));
  EXPECT_TRUE(e.contains(1000));
  EXPECT_FALSE(e.cardinality().has_value());
  // The exceptional point 2 merges into the tail.
  EXPECT_EQ(ExtensionSet::cofinite(FinSet{2}, 3), ExtensionSet::cofinite({}, 2));
  EXPECT_EQ(ExtensionSet::finite(FinSet{4, 9}).cardinality(), 2u);
}

TEST(ExtensionSet, PeriodicTails) {
  const ExtensionSet odd = ExtensionSet::eventually_periodic({}, 0, {false, true});
  EXPECT_EQ(odd.period(), 2u);
  EXPECT_TRUE(odd.contains(7));
  EXPECT_FALSE(odd.contains(8));
  // {true, true} reduces to period 1.
  EXPECT_EQ(ExtensionSet::eventually_periodic({}, 4, {true, true}).period(), 1u);
  const ExtensionSet c = odd.complement();
  for (Index n = 0; n < 20; ++n) EXPECT_NE(c.contains(n), odd.contains(n));
  EXPECT_EQ(odd.minus(FinSet{1, 3}).elements_below(8), (FinSet{5, 7}));
}

TEST(LazyFamily, Membership) {
  const LazyFamily s = schreier();
  EXPECT_TRUE(membership(s, FinSet{2, 3, 4}));
  EXPECT_FALSE(membership(s, FinSet{0, 1}));
  EXPECT_TRUE(membership(s, FinSet{}));
  EXPECT_TRUE(membership(cube(2), FinSet{7, 9}));
}

TEST(LazyFamily, ExtensionSets) {
  EXPECT_EQ(to_string(extension_set(schreier(), FinSet{2})), "{1} + [3..)");
  EXPECT_TRUE(extension_set(cube(1), FinSet{5}).empty());
  EXPECT_TRUE(extension_set(schreier(), FinSet{0}).empty());
  EXPECT_THROW(extension_set(schreier(), FinSet{0, 1}), PreconditionError);
}

// n ∈ ext(s) ⇔ s ∪ {n} ∈ L, and heredity, over small sets.
void check_consistency(const LazyFamily& l, Index bound, std::size_t max_size) {
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << bound); ++u) {
    const FinSet s = FinSet::from_mask(u);
    if (s.size() > max_size || !l.contains(s)) continue;
    if (l.hereditary())
      for (Index i : s) EXPECT_TRUE(l.contains(s.without(i))) << l.descriptor() << " " << to_string(s);
    const ExtensionSet e = l.extension_set(s);
    for (Index n = 0; n < bound + 12; ++n)
      if (!s.contains(n)) EXPECT_EQ(e.contains(n), l.contains(s.with(n))) << l.descriptor() << " " << to_string(s) << " " << n;
    EXPECT_LE(s.size(), l.size_bound(s.empty() ? 0 : s.min()));
  }
}

TEST(LazyFamily, OracleConsistencyForCatalog) {
  for (const LazyFamily& l : {schreier(), cube(0), cube(2), cube(3), block_schreier(2), block_schreier(3),
                              remove_pattern_initial_pairs(), adjacent_pairs_removed(), homeo_not_pi_pair().first,
                              homeo_not_pi_pair().second, permuted_pair_example().first,
                              permuted_pair_example().second, *catalog_family("ex-permuted-schreier")})
    check_consistency(l, 12, 4);
}

TEST(LazyFamily, DerivativeOfCube) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const LazyFamily d = derivative(cube(n));
    for (std::uint64_t u = 0; u < 256; ++u) {
      const FinSet s = FinSet::from_mask(u);
      EXPECT_EQ(d.contains(s), s.size() <= n - 1);
    }
  }
  const LazyFamily d0 = derivative(cube(0));
  EXPECT_FALSE(d0.contains(FinSet{}));
}

TEST(LazyFamily, DerivativeOfSchreier) {
  const LazyFamily d = derivative(schreier());
  EXPECT_TRUE(d.contains(FinSet{3}));
  EXPECT_FALSE(d.contains(FinSet{0}));
  EXPECT_TRUE(d.contains(FinSet{}));
}

// Derivative membership ⇔ a tail exists ⇔ members s ∪ r with min(r) ≥ K for every K ≤ 20.
TEST(LazyFamily, DerivativeMatchesLimitPoints) {
  for (const LazyFamily& l : {schreier(), cube(2), block_schreier(2), adjacent_pairs_removed()}) {
    const LazyFamily d = derivative(l);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << 10); ++u) {
      const FinSet s = FinSet::from_mask(u);
      if (s.size() > 4 || !l.contains(s)) continue;
      bool limit = true;
      for (Index k = 0; k <= 20 && limit; ++k) {
        bool found = false;
        for (Index n = std::max(k, s.empty() ? 0 : s.max() + 1); n < k + 40 && !found; ++n)
          found = l.contains(s.with(n));
        limit = found;
      }
      EXPECT_EQ(d.contains(s), limit) << l.descriptor() << " " << to_string(s);
    }
  }
}

TEST(LazyFamily, SchreierRanks) {
  for (Index n = 0; n <= 8; ++n) EXPECT_EQ(cb_rank_point(schreier(), FinSet{n}).value, OrdinalW2::of(n));
  const RankResult empty = cb_rank_point(schreier(), FinSet{});
  EXPECT_EQ(empty.value, OrdinalW2::omega(1));
  EXPECT_EQ(empty.witnesses.size(), 6u);
  EXPECT_EQ(family_rank(schreier(), OrdinalW2::omega(1)).value, (OrdinalW2{1, 1}));
}

TEST(LazyFamily, CubeRanks) {
  for (std::uint32_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(cb_rank_point(cube(n), FinSet{}).value, OrdinalW2::of(n));
    EXPECT_EQ(family_rank(cube(n)).value, OrdinalW2::of(n + 1));
  }
  EXPECT_EQ(cb_rank_point(cube(2), FinSet{3, 7}).value, OrdinalW2::of(0));
  EXPECT_EQ(family_rank(cube(1)).value, OrdinalW2::of(2));
}

TEST(LazyFamily, RanksAgreeWithWindowedOracle) {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    const LazyFamily c = cube(n);
    const auto member = [&](const FinSet& s) { return c.contains(s); };
    EXPECT_EQ(oracle::windowed_rank(member, FinSet{}, 2 * n + 2, 2), n);
  }
  const LazyFamily s = schreier();
  const auto member = [&](const FinSet& t) { return s.contains(t); };
  for (Index n = 0; n <= 4; ++n)
    EXPECT_EQ(OrdinalW2::of(oracle::windowed_rank(member, FinSet{n}, n + 2 * n + 3, 2)), s.rank(FinSet{n}));
}

TEST(LazyFamily, BudgetExhaustion) {
  const RankResult r = cb_rank_point(schreier(), FinSet{6}, OrdinalW2::of(3));
  EXPECT_TRUE(r.at_least);
  EXPECT_EQ(to_string(r), ">=3");
  EXPECT_EQ(to_string(family_rank(schreier(), OrdinalW2::of(5))), ">=5");
}

TEST(LazyFamily, RankRejectsNonMembers) {
  EXPECT_THROW(cb_rank_point(schreier(), FinSet{0, 1}), PreconditionError);
  EXPECT_THROW(family_rank(finite_family({FinSet{1}})), PreconditionError);
}

TEST(LazyFamily, Truncate) {
  EXPECT_EQ(truncate(schreier(), 4),
            ExplicitFamily(0, 4, {FinSet{}, FinSet{0}, FinSet{1}, FinSet{2}, FinSet{3}, FinSet{1, 2}, FinSet{1, 3},
                                  FinSet{2, 3}}));
  EXPECT_EQ(truncate(cube(2), 0), ExplicitFamily(0, 0, {FinSet{}}));
  const ExplicitFamily t = truncate(schreier(), 7);
  EXPECT_EQ(downward_closure(t), t);
  EXPECT_EQ(truncate(adjacent_pairs_removed(), 4).base(), 1u);
}

TEST(LazyFamily, RanksArePermutationInvariant) {
  const LazyFamily p = *catalog_family("ex-permuted-schreier");
  const Permutation pi = parse_permutation("[0>1 1>0]");
  for (Index a = 0; a <= 6; ++a) EXPECT_EQ(cb_rank_point(p, FinSet{pi(a)}).value, cb_rank_point(schreier(), FinSet{a}).value);
}

TEST(LazyFamily, SingletonDensity) {
  EXPECT_TRUE(singleton_density_check(schreier(), 12, 12));
  EXPECT_TRUE(singleton_density_check(cube(3), 12, 12));
  EXPECT_TRUE(singleton_density_check(block_schreier(3), 12, 12));
  EXPECT_FALSE(singleton_density_check(finite_family({FinSet{}, FinSet{0}, FinSet{1}, FinSet{0, 1}}), 2, 1));
}

}  // namespace
}  // namespace combfam
