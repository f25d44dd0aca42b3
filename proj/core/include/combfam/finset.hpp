#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace combfam {

using Index = std::uint32_t;

/// A finite set of natural indices, stored as a strictly increasing sequence.
///
/// Ordering is the canonical member order used throughout the library:
/// by cardinality first, then lexicographically on the increasing enumeration.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Index> elems);

  /// Sorts and deduplicates.
  static FinSet from_unsorted(std::vector<Index> elems);
  static FinSet from_mask(std::uint64_t mask);
  /// [lo, hi)
  static FinSet interval(Index lo, Index hi);

  std::span<const Index> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Index operator[](std::size_t i) const noexcept { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Precondition: non-empty.
  Index min() const { return elems_.front(); }
  Index max() const { return elems_.back(); }

  bool contains(Index i) const noexcept;
  bool is_subset_of(const FinSet& other) const noexcept;

  FinSet with(Index i) const;
  FinSet without(Index i) const;

  /// Throws PreconditionError when an element is >= 64.
  std::uint64_t mask() const;
  bool fits_mask() const noexcept { return elems_.empty() || elems_.back() < 64; }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b);

 private:
  std::vector<Index> elems_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);

/// `{2 3}`; the empty set prints as `{}`.
std::string to_string(const FinSet& s);
std::ostream& operator<<(std::ostream& os, const FinSet& s);

/// Accepts `{2 3}`, `{}`, `-` and bare `2 3`.
FinSet parse_finset(std::string_view text);

/// Canonical order on bitmask-encoded sets (size, then lexicographic).
bool mask_less(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace combfam
