#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combfam/family.hpp"
#include "combfam/finset.hpp"
#include "combfam/lazy_family.hpp"

namespace combfam {

/// {s : |s| ≤ min(s) + 1} ∪ {∅}, on ω (base 0).
LazyFamily schreier();
/// [ω]^{≤n}
LazyFamily cube(std::uint32_t n);

/// L with the listed sets removed. Every one-point extension of a removed
/// set that stays in L must be removed too, so heredity survives.
LazyFamily remove_sets(const LazyFamily& l, std::vector<FinSet> removed);
/// L ∩ P(ω ∖ excluded)
LazyFamily restrict_ground(const LazyFamily& l, const FinSet& excluded);
LazyFamily union_of(const LazyFamily& a, const LazyFamily& b);
/// A finite family given by its members (no closure is taken).
LazyFamily finite_family(std::vector<FinSet> members);
/// π[L]; π is finitely supported and must fix the points below L's base.
LazyFamily permuted(const LazyFamily& l, const Permutation& pi);

/// {s ∈ S : the two least elements of s are not consecutive}. Compact, not
/// hereditary, not spreading.
LazyFamily remove_pattern_initial_pairs();
/// [ℕ]^{≤2} ∖ {{n, n+1}}, base 1.
LazyFamily adjacent_pairs_removed();
/// [ℕ]^{≤1} ∪ [ℕ ∖ {1}]^2 and [ℕ]^{≤2}, base 1. Homeomorphic (via
/// φ({1}) = {1,2}, φ({n}) = {n−1}, φ({2,m}) = {1,m}, φ({n,m}) = {n−1,m−1})
/// but not π-homeomorphic.
std::pair<LazyFamily, LazyFamily> homeo_not_pi_pair();
/// [ω]^{≤2} ∖ {{2,3}} and [ω]^{≤2} ∖ {{1,2}}; π = (1→3, 2→1, 3→2) maps the
/// first onto the second.
std::pair<LazyFamily, LazyFamily> permuted_pair_example();
Permutation permuted_pair_permutation();

/// The ordinal ω·block + offset, as an index of S(ω·m).
struct BlockIndex {
  std::uint32_t block = 0;
  std::uint32_t offset = 0;
  friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

/// Block indices are interleaved into ω as block + m·offset.
Index encode_block_index(BlockIndex b, std::uint32_t blocks);
BlockIndex decode_block_index(Index i, std::uint32_t blocks);
FinSet encode_block_set(const std::vector<BlockIndex>& elems, std::uint32_t blocks);

/// S(ω·m): a copy of the Schreier family inside each of the m blocks.
LazyFamily block_schreier(std::uint32_t blocks);

/// Named members of the example catalog (`ex-4-perm-pair.F`, ...).
std::vector<std::string> catalog_names();
std::optional<LazyFamily> catalog_family(const std::string& name);

/// A finite forest; nodes are 0..n−1 and roots have no parent.
class FiniteTree {
 public:
  explicit FiniteTree(std::vector<std::optional<Index>> parent);

  static FiniteTree chain(Index length);
  static FiniteTree antichain(Index count);
  /// Complete binary tree with `levels` levels (2^levels − 1 nodes).
  static FiniteTree complete_binary(Index levels);

  Index size() const noexcept { return static_cast<Index>(parent_.size()); }
  std::optional<Index> parent(Index f) const { return parent_.at(f); }
  /// Number of strict predecessors.
  Index height(Index f) const { return heights_.at(f); }
  /// One more than the largest node height (0 for the empty tree).
  Index height() const noexcept;
  bool comparable(Index f, Index g) const;
  bool is_chain(const FinSet& nodes) const;

 private:
  std::vector<std::optional<Index>> parent_;
  std::vector<Index> heights_;
};

/// {C ⊆ T : C is a chain and {ht(f) : f ∈ C} ∈ F}. F must be hereditary and
/// its window must cover the tree height.
ExplicitFamily tree_lift(const FiniteTree& tree, const ExplicitFamily& heights);

}  // namespace combfam
