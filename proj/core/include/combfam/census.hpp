#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "combfam/family.hpp"
#include "combfam/iso_search.hpp"

namespace combfam {

struct EnumerationOptions {
  /// Every singleton of [0, M) is a member; otherwise singletons are free
  /// (spreading still makes the missing ones an initial segment).
  bool require_singletons = true;
};

/// Every hereditary family with members in [0, M), spreading within [0, M)
/// and containing ∅, on window N. Requires N ≥ 3M (twice M of slack plus
/// the largest possible member). Sorted by member count, then canonically.
std::vector<ExplicitFamily> enumerate_hereditary_spreading(Index m, Index n, EnumerationOptions opt = {});
/// Streaming form; families arrive in generation order, not sorted.
void for_each_hereditary_spreading(Index m, Index n, EnumerationOptions opt,
                                   const std::function<void(const ExplicitFamily&)>& sink);

struct CensusOptions {
  EnumerationOptions enumeration;
  unsigned workers = 1;
};

struct Counterexample {
  std::size_t first = 0, second = 0;  // indices into the enumeration
  ExplicitFamily f, g;
  Permutation pi;
};

struct FamilyRecord {
  std::string serialization;  // canonical one-line form
  std::vector<PointSignature> signature;
  std::string automorphisms;  // total count, decimal
};

struct CensusReport {
  Index members = 0, window = 0;
  std::size_t families = 0;
  std::size_t pairs = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<FamilyRecord> records;
};

/// Runs find_pi_homeomorphism on every unordered pair of distinct
/// enumerated families.
CensusReport uniqueness_census(Index m, Index n, CensusOptions opt = {});
/// `families: X, pairs: Y, counterexamples: Z`, then one line per counterexample.
std::string format_census(const CensusReport& r);
/// One JSON object per line: a summary, then one record per family.
std::string format_census_machine(const CensusReport& r);

/// Members joined by `;`, `-` for ∅, prefixed by `base/window:`.
std::string one_line(const ExplicitFamily& f);

/// F relabelled by i ↦ i − base.
ExplicitFamily shift_to_base_zero(const ExplicitFamily& f);

struct ReachabilityMatch {
  std::size_t index = 0;
  ExplicitFamily partner;
  Permutation pi;
};

struct ReachabilityReport {
  Index members = 0, window = 0;
  std::size_t candidates = 0;
  std::vector<ReachabilityMatch> matches;
};

/// Searches every enumerated hereditary spreading family on (M, N), with
/// relaxed singletons, for one π-homeomorphic to F. F is shifted to base 0
/// and must have its members in [0, M).
ReachabilityReport regular_reachability(const ExplicitFamily& f, Index m, Index n);

}  // namespace combfam
