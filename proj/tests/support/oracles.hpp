#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the value types and plain membership lookups.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "combfam/family.hpp"
#include "combfam/finset.hpp"
#include "combfam/norm.hpp"

namespace oracle {

using combfam::ExplicitFamily;
using combfam::FinSet;
using combfam::Index;
using combfam::Permutation;

/// Some bijection σ: s → t with σ(i) ≥ i, by trying every bijection.
bool spread_by_injection(const FinSet& s, const FinSet& t);

/// Every subset of every member is a member, by enumerating submasks.
bool hereditary(const ExplicitFamily& f);

/// Every spread of every member landing below `headroom` is a member,
/// using spread_by_injection over all sets below the headroom.
bool spreading(const ExplicitFamily& f, Index headroom);

/// Lexicographically first permutation (fixing points below base) mapping F
/// onto G, by walking all permutations in order.
std::optional<Permutation> pi_search(const ExplicitFamily& f, const ExplicitFamily& g);

/// Hereditary spreading families on [0, m) containing ∅ (and all singletons
/// when asked), by testing every family of subsets; window n.
std::vector<ExplicitFamily> hereditary_spreading_families(Index m, Index n, bool require_singletons);

/// Every hereditary family on [0, w), by testing every family of subsets.
std::vector<ExplicitFamily> hereditary_families(Index w);

/// max over members of Σ|x_i|, straight from the definition.
combfam::Rational norm(const ExplicitFamily& f, const std::vector<combfam::Rational>& x);

/// Window rank from membership alone: rk(s) = 0 unless at least `k`
/// extensions s ∪ {m}, max(s) < m < w, are members; then 1 + the k-th
/// largest of their ranks. Approximates the limit-point recursion of a
/// compact hereditary family when w leaves enough room above s.
std::uint32_t windowed_rank(const std::function<bool(const FinSet&)>& member, const FinSet& s, Index w,
                            std::size_t k);

/// Downward closure of random sets: `seeds` sets on [0, w), each point
/// kept with probability p.
ExplicitFamily random_hereditary(std::mt19937_64& rng, Index w, std::size_t seeds, double p);

}  // namespace oracle
