#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combfam/extension_set.hpp"
#include "combfam/family.hpp"
#include "combfam/lazy_family.hpp"

namespace combfam {

// Explicit families stand in for ω through a horizon H ≤ window: I-sets,
// strata and reconstructions only look at points of [base, H). Passing no
// horizon means the window.

/// I_s ∩ [base, H): the points i ∉ s with s ∪ {i} not a member. Nothing is
/// known beyond the horizon, which is recorded alongside.
struct ISet {
  FinSet points;
  Index horizon = 0;
  std::size_t size() const noexcept { return points.size(); }
};
std::string to_string(const ISet& i);

/// Requires s ∈ F and s ⊆ [base, H).
ISet i_set(const ExplicitFamily& f, const FinSet& s, std::optional<Index> horizon = std::nullopt);
/// {i ≥ base : i ∉ s, s ∪ {i} ∉ L}; infinite sets carry a tail.
ExtensionSet i_set(const LazyFamily& l, const FinSet& s);

/// F_{n,k} = {s ∈ F ∩ [H]^n : |I_s| ≤ k}.
ExplicitFamily stratum(const ExplicitFamily& f, std::size_t n, std::size_t k,
                       std::optional<Index> horizon = std::nullopt);

/// Outcome of the uniqueness-proof claim for a spread pair (s, t).
struct ClaimResult {
  std::size_t is = 0, it = 0;  // |I_s|, |I_t|
  bool inequality = false;     // |I_t| ≤ |I_s|
  bool step1 = false;          // I_t ∖ s ⊆ I_s ∖ t
  bool step2 = false;          // |I_t ∩ s| ≤ |I_s ∩ t|
  bool injection = false;      // σ maps I_t ∩ s into I_s ∩ t
  bool ok() const noexcept { return inequality && step1 && step2 && injection; }
};

/// s, t members of equal size, t a spread of s; F is assumed spreading
/// within the horizon (not re-checked). σ is the canonical spread witness.
ClaimResult claim_check(const ExplicitFamily& f, const FinSet& s, const FinSet& t,
                        std::optional<Index> horizon = std::nullopt);

/// Lazy variant: cardinalities may be infinite (infinite dominates).
struct LazyClaimResult {
  std::optional<std::size_t> is, it;  // nullopt = infinite
  bool inequality = false, step1 = false, step2 = false, injection = false;
  bool ok() const noexcept { return inequality && step1 && step2 && injection; }
};
LazyClaimResult claim_check(const LazyFamily& l, const FinSet& s, const FinSet& t);

struct ClaimViolation {
  FinSet s, t;
  ClaimResult result;
};
struct ClaimScan {
  std::size_t pairs = 0;
  std::vector<ClaimViolation> violations;
};
/// Every ordered pair (s, t) of members below the horizon with t a spread of s.
ClaimScan claim_scan(const ExplicitFamily& f, std::optional<Index> horizon = std::nullopt);

/// τ_k(X): the k least elements of X (all of X when |X| ≤ k).
FinSet initial_segment(const FinSet& x, std::size_t k);

/// Level n+1 from the level-n strata: {s ∪ {i} : s ∈ F_{n,k} ∖ F_{n,k−1},
/// i ∈ [base, H) ∖ s, i ∉ τ_k([base, H) ∖ s)}. strata[k] = F_{n,k}.
ExplicitFamily reconstruct_from_strata(const std::vector<ExplicitFamily>& strata, Index base, Index window,
                                       Index horizon);
/// Strata of F at level n, then reconstruct_from_strata.
ExplicitFamily reconstruct_level(const ExplicitFamily& f, std::size_t n, std::optional<Index> horizon = std::nullopt);
/// F ∩ [base, H)^{n+1}, the target of reconstruct_level.
ExplicitFamily level_below(const ExplicitFamily& f, std::size_t n, std::optional<Index> horizon = std::nullopt);

}  // namespace combfam
