#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "combfam/family.hpp"
#include "combfam/lazy_family.hpp"
#include "combfam/ordinal.hpp"

namespace combfam {

/// π-invariant data attached to a point α of a family.
struct PointSignature {
  /// size_counts[k] = number of k-element members containing α.
  std::vector<std::uint32_t> size_counts;
  /// Largest member containing α (0 if none).
  std::uint32_t depth = 0;
  /// {α} is a member.
  bool singleton = false;
  /// Number of n with {α, n} a member.
  std::uint32_t extensions = 0;
  /// Singleton rank from the lazy source, when one is known.
  std::optional<OrdinalW2> rank;

  bool is_free() const noexcept { return depth == 0; }
  friend bool operator==(const PointSignature&, const PointSignature&) = default;
  friend auto operator<=>(const PointSignature&, const PointSignature&) = default;
};

PointSignature point_signature(const ExplicitFamily& f, Index alpha);
/// Signatures of every point of [0, window).
std::vector<PointSignature> point_signatures(const ExplicitFamily& f);
/// Adds the rank of {α} in `source` when it is a member.
std::vector<PointSignature> point_signatures(const ExplicitFamily& truncation, const LazyFamily& source);
/// `[c1,c2,..]/d/s/e` with `/r=<rank>` when known.
std::string to_string(const PointSignature& sig);

/// The lexicographically least permutation π of the window with π[F] = G,
/// or nullopt. F and G must share window and base; points below the base
/// stay fixed.
std::optional<Permutation> find_pi_homeomorphism(const ExplicitFamily& f, const ExplicitFamily& g);

inline constexpr std::size_t kDefaultAutomorphismCap = 100000;

struct AutomorphismReport {
  /// Automorphisms moving only points that lie in some member, increasing.
  std::vector<Permutation> support;
  /// Points of [base, window) outside every member; they permute freely.
  std::uint32_t free_points = 0;
  /// |support| · free_points!
  mpz_class total;
};

/// Throws SearchOverflow when more than `cap` support automorphisms exist.
AutomorphismReport automorphisms(const ExplicitFamily& f, std::size_t cap = kDefaultAutomorphismCap);
/// Automorphisms of a truncation that also preserve the singleton ranks of
/// its lazy source. Window artifacts (points that only look alike because
/// the truncation cuts their extensions) are ruled out this way.
AutomorphismReport automorphisms(const ExplicitFamily& truncation, const LazyFamily& source,
                                 std::size_t cap = kDefaultAutomorphismCap);

}  // namespace combfam
