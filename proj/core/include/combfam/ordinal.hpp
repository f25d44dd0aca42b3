#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace combfam {

/// The ordinal ω·limit + finite, below ω·ω.
struct OrdinalW2 {
  std::uint32_t limit = 0;   // q
  std::uint32_t finite = 0;  // r

  static constexpr OrdinalW2 of(std::uint32_t n) { return {0, n}; }
  static constexpr OrdinalW2 omega(std::uint32_t q = 1) { return {q, 0}; }

  constexpr bool is_finite() const { return limit == 0; }
  constexpr bool is_limit() const { return limit > 0 && finite == 0; }
  constexpr OrdinalW2 successor() const { return {limit, finite + 1}; }

  /// Rank of a point in X' given its rank in X (which must be ≥ 1):
  /// 1 + α = ρ, so finite ranks drop by one and ranks ≥ ω are unchanged.
  constexpr OrdinalW2 after_derivative() const { return limit == 0 ? OrdinalW2{0, finite - 1} : *this; }

  friend constexpr bool operator==(const OrdinalW2&, const OrdinalW2&) = default;
  friend constexpr auto operator<=>(const OrdinalW2&, const OrdinalW2&) = default;
};

/// `7`, `w`, `w+1`, `w*2+3`.
std::string to_string(const OrdinalW2& o);
/// Inverse of to_string; also accepts `omega` for `w`.
OrdinalW2 parse_ordinal(std::string_view text);

}  // namespace combfam
