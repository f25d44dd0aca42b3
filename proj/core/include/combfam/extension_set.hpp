#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combfam/finset.hpp"

namespace combfam {

/// An eventually periodic subset of ω: finitely many exceptional points
/// below `threshold`, and from `threshold` on every n with n mod period in
/// the residue set. Without a tail the set is finite.
///
/// Canonical form: minimal period, minimal threshold, exceptional points all
/// below the threshold; a tail with no residues is dropped.
class ExtensionSet {
 public:
  ExtensionSet() = default;
  static ExtensionSet finite(FinSet points);
  /// `residues[k]` says whether n ≡ k (mod residues.size()) is in the tail.
  static ExtensionSet eventually_periodic(FinSet exceptional, Index threshold, std::vector<bool> residues);
  /// [threshold, ∞) plus exceptional points below it.
  static ExtensionSet cofinite(FinSet exceptional, Index threshold);

  bool contains(Index n) const;
  bool has_tail() const noexcept { return tail_.has_value(); }
  bool is_finite() const noexcept { return !tail_.has_value(); }
  /// nullopt when infinite.
  std::optional<std::size_t> cardinality() const;
  bool empty() const noexcept { return !tail_ && exceptional_.empty(); }

  const FinSet& exceptional() const noexcept { return exceptional_; }
  std::optional<Index> tail_threshold() const;
  Index period() const;
  std::vector<bool> residues() const;

  /// Members below `bound`.
  FinSet elements_below(Index bound) const;
  ExtensionSet complement() const;
  ExtensionSet minus(const FinSet& points) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  struct Tail {
    Index threshold = 0;
    std::vector<bool> residues;  // size == period
    friend bool operator==(const Tail&, const Tail&) = default;
  };

  void normalize();

  FinSet exceptional_;
  std::optional<Tail> tail_;
};

/// `{1} + [3..)`, `{} + [0..) mod 2 {1}`, `{0 4}`.
std::string to_string(const ExtensionSet& e);

}  // namespace combfam
