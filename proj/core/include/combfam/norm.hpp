#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "combfam/family.hpp"
#include "combfam/finset.hpp"
#include "combfam/lazy_family.hpp"

namespace combfam {

using Rational = mpq_class;

/// Finitely supported vector with exact rational entries; zeros are never stored.
class SparseVector {
 public:
  SparseVector() = default;
  /// Dense constructor: entry i of `values` goes to index i.
  static SparseVector dense(std::span<const Rational> values);
  static SparseVector indicator(const FinSet& s, const Rational& value = 1);

  Rational get(Index i) const;
  void set(Index i, const Rational& v);
  FinSet support() const;
  const std::map<Index, Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::map<Index, Rational> entries_;
};

/// Σ_{α ∈ support} θ_α e*_α with θ_α = ±1.
struct SignedFunctional {
  FinSet support;
  /// signs[i] ∈ {+1, −1} belongs to support[i].
  std::vector<std::int8_t> signs;

  SignedFunctional() = default;
  SignedFunctional(FinSet s, std::vector<std::int8_t> signs);
  static SignedFunctional positive(const FinSet& s);

  std::int8_t sign_at(Index alpha) const;
  friend bool operator==(const SignedFunctional&, const SignedFunctional&) = default;
  friend auto operator<=>(const SignedFunctional& a, const SignedFunctional& b) {
    if (auto c = a.support <=> b.support; c != 0) return c;
    return a.signs <=> b.signs;
  }
};

/// `+0 -2 +5`; the zero functional prints as `0`.
std::string to_string(const SignedFunctional& f);

/// T e_α = θ_α e_{π(α)}; θ is −1 exactly on `negated`.
struct SignedPermutationOperator {
  Permutation pi;
  FinSet negated;
};

/// max over members s of Σ_{α∈s} |x_α|. Scans every member, so it is exact
/// for non-hereditary families too. The empty family has norm 0.
Rational norm(const ExplicitFamily& f, const SparseVector& x);
/// Lazy hereditary families: s ∩ supp(x) ∈ L for every member s, so only
/// subsets of the support are searched.
Rational norm(const LazyFamily& l, const SparseVector& x);

Rational functional_apply(const SignedFunctional& f, const SparseVector& x);

/// {Σ_{α∈s} θ_α e*_α : s maximal, θ ∈ {±1}^s}, members in canonical order and
/// sign patterns with + before −. Rejects non-hereditary families.
std::vector<SignedFunctional> extreme_points(const ExplicitFamily& f);

/// Every signed functional over every member of F.
std::vector<SignedFunctional> candidate_functionals(const ExplicitFamily& f);

/// Decides whether f is a vertex of conv(candidate_functionals(F)) with an
/// exact linear program: f is not a vertex iff it is a convex combination
/// of the other candidates.
bool is_extreme_brute(const ExplicitFamily& f, const SignedFunctional& g);

/// Exact feasibility of target = Σ λ_j points_j, Σ λ_j = 1, λ ≥ 0. Returns
/// the weights when feasible. All points must share the target's dimension.
std::optional<std::vector<Rational>> convex_combination(const std::vector<std::vector<Rational>>& points,
                                                        const std::vector<Rational>& target);

/// norm(F, x) = max |f(x)| over extreme_points(F) for every sampled x.
bool norming_check(const ExplicitFamily& f, std::span<const SparseVector> sample);

SparseVector apply_operator(const SignedPermutationOperator& t, const SparseVector& x);

struct IsometryResult {
  bool isometry = false;
  /// A set in π[F] Δ G; its indicator has norm_f ≠ norm_g.
  std::optional<FinSet> witness;
  Rational norm_f;  // ‖T⁻¹ 1_s‖_F
  Rational norm_g;  // ‖1_s‖_G
};

/// T is an isometry X_F → X_G iff π[F] = G. Requires hereditary F and G on
/// the same window, with π inside it.
IsometryResult is_isometry(const SignedPermutationOperator& t, const ExplicitFamily& f, const ExplicitFamily& g);

/// `p/q` or an integer.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Vector text format: `vec` then `index value` lines, increasing indices,
/// `#` comments.
std::string format_vector(const SparseVector& x);
SparseVector parse_vector(std::string_view text);

}  // namespace combfam
