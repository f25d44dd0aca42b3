#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "combfam/family.hpp"
#include "combfam/finset.hpp"

namespace combfam {

/// An injection σ from `source` onto `target` with σ(i) ≥ i.
struct SpreadWitness {
  FinSet source;
  FinSet target;
  std::vector<std::pair<Index, Index>> map;  // (i, σ(i)), increasing in i

  Index operator()(Index i) const;
  FinSet image(const FinSet& s) const;
};

/// t is a spread of s: equal sizes and t_i ≥ s_i position by position.
bool is_spread_of(const FinSet& s, const FinSet& t);
/// The order-preserving witness σ(s_i) = t_i, when t is a spread of s.
std::optional<SpreadWitness> spread_witness(const FinSet& s, const FinSet& t);
/// The witness fixing s ∩ t pointwise and matching s∖t with t∖s in
/// increasing order. Throws PreconditionError when t is not a spread of s.
SpreadWitness canonical_spread_witness(const FinSet& s, const FinSet& t);

/// Closed under spreads landing inside [base, headroom). Every member must
/// lie in [base, headroom) and headroom ≤ window.
bool is_spreading(const ExplicitFamily& f, Index headroom);
/// A member and one of its in-headroom spreads that is missing, if any.
std::optional<std::pair<FinSet, FinSet>> spreading_violation(const ExplicitFamily& f, Index headroom);

/// Smallest superfamily closed under spreads inside the window.
ExplicitFamily spreading_closure(const ExplicitFamily& f);

}  // namespace combfam
