#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combfam/finset.hpp"

namespace combfam {

/// Largest window an explicit family can live on (members are bitmasks).
inline constexpr Index kMaxWindow = 64;

/// A finite family of finite sets inside the window [base, window).
///
/// Members are deduplicated and kept in canonical order (size, then
/// lexicographic). Nothing is claimed about the family beyond the window.
class ExplicitFamily {
 public:
  ExplicitFamily() = default;
  ExplicitFamily(Index base, Index window, std::span<const FinSet> members);
  ExplicitFamily(Index base, Index window, std::initializer_list<FinSet> members);
  static ExplicitFamily from_masks(Index base, Index window, std::vector<std::uint64_t> masks);

  Index base() const noexcept { return base_; }
  Index window() const noexcept { return window_; }
  std::size_t size() const noexcept { return masks_.size(); }
  bool empty() const noexcept { return masks_.empty(); }

  /// Members in canonical order.
  std::span<const std::uint64_t> masks() const noexcept { return masks_; }
  std::vector<FinSet> members() const;
  FinSet member(std::size_t i) const { return FinSet::from_mask(masks_[i]); }

  bool contains(const FinSet& s) const;
  bool contains_mask(std::uint64_t m) const noexcept;

  /// Union of all members.
  std::uint64_t support_mask() const noexcept;
  std::uint64_t ground_mask() const noexcept;
  std::size_t max_member_size() const noexcept;

  /// Same members, different window; members must still fit.
  ExplicitFamily rewindowed(Index window) const;

  friend bool operator==(const ExplicitFamily& a, const ExplicitFamily& b) {
    return a.base_ == b.base_ && a.window_ == b.window_ && a.masks_ == b.masks_;
  }
  /// Member count, then canonical member lists; windows and bases first.
  friend bool operator<(const ExplicitFamily& a, const ExplicitFamily& b);

 private:
  Index base_ = 0;
  Index window_ = 0;
  std::vector<std::uint64_t> masks_;   // canonical order
  std::vector<std::uint64_t> sorted_;  // numeric order, for lookup
};

/// A bijection of [0, window) extended by the identity beyond it.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> table);
  static Permutation identity(Index window);
  /// Builds from `from > to` pairs; unlisted points are fixed. Throws
  /// PreconditionError when the pairs do not form a bijection.
  static Permutation from_pairs(std::span<const std::pair<Index, Index>> pairs);

  Index window() const noexcept { return static_cast<Index>(table_.size()); }
  std::span<const Index> table() const noexcept { return table_; }

  Index operator()(Index i) const noexcept { return i < table_.size() ? table_[i] : i; }
  FinSet image(const FinSet& s) const;
  std::uint64_t image_mask(std::uint64_t m) const;

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation extended(Index window) const;
  bool is_identity() const noexcept;
  /// Points moved, increasing.
  std::vector<Index> moved_points() const;

  friend bool operator==(const Permutation& a, const Permutation& b);
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  std::vector<Index> table_;
};

/// `[1>3 2>1 3>2]` listing moved points; identity prints as `[]`.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

bool contains(const ExplicitFamily& f, const FinSet& s);
bool is_hereditary(const ExplicitFamily& f);
ExplicitFamily downward_closure(const ExplicitFamily& f);
ExplicitFamily maximal_elements(const ExplicitFamily& f);
/// {π[s] : s ∈ F}. π is extended by the identity; it must map the window
/// onto itself and fix the points below base.
ExplicitFamily apply_permutation(const ExplicitFamily& f, const Permutation& pi);
/// {s ∈ F : s ⊆ A}
ExplicitFamily trace(const ExplicitFamily& f, const FinSet& a);
/// Members of cardinality exactly n.
ExplicitFamily level(const ExplicitFamily& f, std::size_t n);
/// Every singleton of [base, bound) is a member.
bool has_all_singletons(const ExplicitFamily& f, Index bound);

/// Family text format: `ground <base> <window>` then one member per line,
/// `-` for the empty set, `#` comments. Written in canonical order.
std::string format_family(const ExplicitFamily& f);
void write_family(std::ostream& os, const ExplicitFamily& f);
ExplicitFamily parse_family(std::string_view text);
ExplicitFamily read_family(std::istream& is);

}  // namespace combfam
