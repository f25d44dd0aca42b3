#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <random>

#include "combfam/constructions.hpp"
#include "combfam/error.hpp"
#include "combfam/family.hpp"
#include "oracles.hpp"

namespace combfam {
namespace {

ExplicitFamily fam(Index window, std::initializer_list<FinSet> members) { return ExplicitFamily(0, window, members); }

ExplicitFamily cube_window(Index w, std::size_t n) {
  std::vector<FinSet> m;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << w); ++u)
    if (static_cast<std::size_t>(std::popcount(u)) <= n) m.push_back(FinSet::from_mask(u));
  return ExplicitFamily(0, w, m);
}

TEST(Family, Contains) {
  EXPECT_TRUE(contains(fam(2, {{}, {0}, {1}, {0, 1}}), FinSet{0, 1}));
  EXPECT_FALSE(contains(fam(2, {{}, {0}, {1}}), FinSet{0, 1}));
  EXPECT_FALSE(contains(cube_window(3, 2), FinSet{0, 1, 2}));
}

TEST(Family, RejectsMembersOutsideWindow) {
  EXPECT_THROW(fam(2, {{2}}), PreconditionError);
  EXPECT_THROW(ExplicitFamily(1, 3, {FinSet{0}}), PreconditionError);
}

TEST(Family, Hereditary) {
  EXPECT_TRUE(is_hereditary(fam(2, {{}, {0}, {1}, {0, 1}})));
  EXPECT_FALSE(is_hereditary(fam(2, {{0, 1}})));
  EXPECT_TRUE(is_hereditary(truncate(schreier(), 5)));
}

TEST(Family, DownwardClosure) {
  EXPECT_EQ(downward_closure(fam(2, {{0, 1}})), fam(2, {{}, {0}, {1}, {0, 1}}));
  EXPECT_EQ(downward_closure(fam(4, {{1, 3}, {2}})), fam(4, {{}, {1}, {2}, {3}, {1, 3}}));
  const ExplicitFamily h = cube_window(4, 2);
  EXPECT_EQ(downward_closure(h), h);
}

TEST(Family, MaximalElements) {
  EXPECT_EQ(maximal_elements(fam(2, {{}, {0}, {1}, {0, 1}})), fam(2, {{0, 1}}));
  const ExplicitFamily anti = fam(4, {{0, 1}, {2}, {1, 3}});
  EXPECT_EQ(maximal_elements(anti), anti);
  EXPECT_EQ(maximal_elements(truncate(schreier(), 4)), fam(4, {{0}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(Family, ApplyPermutation) {
  const ExplicitFamily f = fam(3, {{1}, {2}});
  EXPECT_EQ(apply_permutation(f, Permutation::identity(3)), f);
  const std::pair<Index, Index> swap12[] = {{1, 2}, {2, 1}};
  EXPECT_EQ(apply_permutation(f, Permutation::from_pairs(swap12)), f);
  const std::pair<Index, Index> swap02[] = {{0, 2}, {2, 0}};
  EXPECT_EQ(apply_permutation(fam(3, {{0, 1}}), Permutation::from_pairs(swap02)), fam(3, {{1, 2}}));
}

TEST(Family, ApplyPermutationRejectsEscapingImages) {
  const std::pair<Index, Index> swap[] = {{0, 5}, {5, 0}};
  EXPECT_THROW(apply_permutation(fam(3, {{0}}), Permutation::from_pairs(swap)), PreconditionError);
}

TEST(Family, Trace) {
  const ExplicitFamily c = cube_window(3, 2);
  EXPECT_EQ(trace(c, FinSet{0, 1, 2}), c);
  EXPECT_EQ(trace(c, FinSet{}), fam(3, {{}}));
  EXPECT_EQ(trace(c, FinSet{0, 2}), fam(3, {{}, {0}, {2}, {0, 2}}));
}

TEST(Family, PermutationAlgebra) {
  const Permutation p = parse_permutation("[1>3 2>1 3>2]");
  EXPECT_EQ(to_string(p), "[1>3 2>1 3>2]");
  EXPECT_TRUE(p.compose(p.inverse()).is_identity());
  EXPECT_EQ(p(7), 7u);
  EXPECT_EQ(to_string(Permutation::identity(4)), "[]");
  EXPECT_EQ(p, p.extended(9));
  const std::pair<Index, Index> bad[] = {{0, 1}, {1, 1}};
  EXPECT_THROW(Permutation::from_pairs(bad), PreconditionError);
}

TEST(Family, TextFormatRoundTrip) {
  const ExplicitFamily f = truncate(schreier(), 6);
  EXPECT_EQ(parse_family(format_family(f)), f);
  const ExplicitFamily shifted(1, 4, {FinSet{}, FinSet{1}, FinSet{3}, FinSet{1, 3}});
  EXPECT_EQ(parse_family(format_family(shifted)), shifted);
}

TEST(Family, TextFormatAcceptsAnyOrderAndComments) {
  const ExplicitFamily f = parse_family("# comment\nground 0 3\n0 1\n-\n1\n0\n");
  EXPECT_EQ(f, fam(3, {{}, {0}, {1}, {0, 1}}));
  EXPECT_EQ(format_family(f), "ground 0 3\n-\n0\n1\n0 1\n");
}

TEST(Family, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("ground 0 3\n0\n2 1\n"), 3u);
  EXPECT_EQ(line_of("ground 0 3\n5\n"), 2u);
  EXPECT_EQ(line_of("0 1\n"), 1u);
  EXPECT_EQ(line_of("ground 0 3\n# ok\n0 x\n"), 3u);
}

// Invariants over random families.
TEST(Family, ClosureAndPermutationInvariants) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Index w = 1 + rng() % 6;
    std::vector<FinSet> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(FinSet::from_mask(rng() & ((std::uint64_t{1} << w) - 1)));
    const ExplicitFamily f(0, w, gens);
    const ExplicitFamily d = downward_closure(f);
    EXPECT_TRUE(is_hereditary(d));
    EXPECT_TRUE(oracle::hereditary(d));
    EXPECT_EQ(downward_closure(d), d);
    EXPECT_EQ(downward_closure(maximal_elements(d)), d);

    std::vector<Index> table(w);
    std::iota(table.begin(), table.end(), 0);
    std::shuffle(table.begin(), table.end(), rng);
    const Permutation p(table);
    const ExplicitFamily img = apply_permutation(d, p);
    EXPECT_EQ(img.size(), d.size());
    EXPECT_TRUE(is_hereditary(img));
    EXPECT_EQ(apply_permutation(img, p.inverse()), d);
    EXPECT_EQ(maximal_elements(img), apply_permutation(maximal_elements(d), p));
  }
}

}  // namespace
}  // namespace combfam
