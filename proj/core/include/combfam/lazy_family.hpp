#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "combfam/extension_set.hpp"
#include "combfam/family.hpp"
#include "combfam/finset.hpp"
#include "combfam/ordinal.hpp"

namespace combfam {

/// How rk(s ∪ {n}) behaves along one residue class of n ≥ threshold.
struct TailClass {
  enum class Kind : std::uint8_t {
    Absent,    // s ∪ {n} is not a member
    Constant,  // member, with the same rank for every n in the class
    Growing,   // member, rank nondecreasing in n, ω·limit + r with r unbounded
  };
  Kind kind = Kind::Absent;
  std::uint32_t limit = 0;

  static TailClass absent() { return {}; }
  static TailClass constant() { return {Kind::Constant, 0}; }
  static TailClass growing(std::uint32_t limit) { return {Kind::Growing, limit}; }

  friend bool operator==(const TailClass&, const TailClass&) = default;
};

/// Eventual behaviour of the one-point extensions s ∪ {n}, n → ∞.
///
/// `threshold` is always greater than max(s); classes are indexed by
/// n mod classes.size().
struct TailProfile {
  Index threshold = 0;
  std::vector<TailClass> classes{TailClass::absent()};

  Index period() const noexcept { return static_cast<Index>(classes.size()); }
  /// Smallest n ≥ threshold with n ≡ residue (mod period).
  Index representative(Index residue) const noexcept;
  bool has_tail() const noexcept;

  static TailProfile none(const FinSet& s);
  static TailProfile uniform(Index threshold, TailClass c);
};

/// One node of a lazy family expression. Implementations are immutable.
///
/// Every node classifies its tails in closed form; ranks default to the
/// recursion rk(s) = sup{β+1 : rk(s ∪ {n}) ≥ β for infinitely many n},
/// which is valid whenever the family is hereditary near its members.
class FamilyNode {
 public:
  virtual ~FamilyNode() = default;

  virtual bool contains(const FinSet& s) const = 0;
  /// Defined for every finite set, member or not.
  virtual TailProfile tail(const FinSet& s) const = 0;
  /// Cantor–Bendixson rank of a member.
  virtual OrdinalW2 rank(const FinSet& s) const;
  /// Bound on |s| over members s with min(s) ≤ m.
  virtual std::size_t size_bound(Index m) const = 0;
  virtual bool hereditary() const = 0;
  virtual Index base() const = 0;
  virtual std::string descriptor() const = 0;
};

/// Shared handle to an immutable family expression on ω.
class LazyFamily {
 public:
  explicit LazyFamily(std::shared_ptr<const FamilyNode> node);

  bool contains(const FinSet& s) const { return node_->contains(s); }
  /// {n ∉ s : s ∪ {n} ∈ L}. Throws PreconditionError for non-members.
  ExtensionSet extension_set(const FinSet& s) const;
  TailProfile tail(const FinSet& s) const { return node_->tail(s); }
  /// Raw rank of a member, no budget or certificate.
  OrdinalW2 rank(const FinSet& s) const;
  std::size_t size_bound(Index m) const { return node_->size_bound(m); }
  bool hereditary() const { return node_->hereditary(); }
  Index base() const { return node_->base(); }
  std::string descriptor() const { return node_->descriptor(); }

  const FamilyNode& node() const noexcept { return *node_; }
  const std::shared_ptr<const FamilyNode>& node_ptr() const noexcept { return node_; }

 private:
  std::shared_ptr<const FamilyNode> node_;
};

bool membership(const LazyFamily& l, const FinSet& s);
ExtensionSet extension_set(const LazyFamily& l, const FinSet& s);

/// L' = {s ∈ L : extension_set(L, s) is infinite}.
LazyFamily derivative(const LazyFamily& l);

/// A point rank, capped by a budget, with the evidence used to certify it.
struct RankResult {
  OrdinalW2 value;
  bool at_least = false;  // rank exceeds the budget; `value` is the budget
  /// Derivative stages checked by iteration (finite ranks).
  std::uint32_t stages_checked = 0;
  /// Extension points and their ranks witnessing a limit rank.
  std::vector<std::pair<FinSet, OrdinalW2>> witnesses;
};

inline constexpr OrdinalW2 kDefaultRankBudget = OrdinalW2::omega(2);

/// Largest β with s ∈ L^(β). Throws PreconditionError for non-members and
/// UnsupportedDescriptor when a limit certificate cannot be produced.
RankResult cb_rank_point(const LazyFamily& l, const FinSet& s, OrdinalW2 budget = kDefaultRankBudget);
/// Smallest α with L^(α) = ∅, i.e. rk(∅) + 1. Requires ∅ ∈ L.
RankResult family_rank(const LazyFamily& l, OrdinalW2 budget = kDefaultRankBudget);

/// `7`, `w+1`, or `>=w*2` when the budget ran out.
std::string to_string(const RankResult& r);

/// {s ∈ L : s ⊆ [base, window)}.
ExplicitFamily truncate(const LazyFamily& l, Index window);

/// Every α in [base, alpha_bound) lies in a maximal member s with
/// s ∩ [0, window) = {α}: the finite shadow of "every singleton is a limit of
/// maximal members". Requires a hereditary family.
bool singleton_density_check(const LazyFamily& l, Index alpha_bound, Index window);

}  // namespace combfam
