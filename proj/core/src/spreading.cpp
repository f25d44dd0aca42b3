#include "combfam/spreading.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "combfam/error.hpp"

namespace combfam {

Index SpreadWitness::operator()(Index i) const {
  auto it = std::lower_bound(map.begin(), map.end(), std::pair<Index, Index>{i, 0});
  if (it == map.end() || it->first != i) throw PreconditionError("point outside the witness domain");
  return it->second;
}

FinSet SpreadWitness::image(const FinSet& s) const {
  std::vector<Index> out;
  for (Index i : s) out.push_back((*this)(i));
  return FinSet::from_unsorted(std::move(out));
}

bool is_spread_of(const FinSet& s, const FinSet& t) {
  if (s.size() != t.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (t[i] < s[i]) return false;
  return true;
}

std::optional<SpreadWitness> spread_witness(const FinSet& s, const FinSet& t) {
  if (!is_spread_of(s, t)) return std::nullopt;
  SpreadWitness w{s, t, {}};
  for (std::size_t i = 0; i < s.size(); ++i) w.map.emplace_back(s[i], t[i]);
  return w;
}

SpreadWitness canonical_spread_witness(const FinSet& s, const FinSet& t) {
  if (!is_spread_of(s, t))
    throw PreconditionError(to_string(t) + " is not a spread of " + to_string(s));
  const FinSet common = set_intersection(s, t);
  const FinSet moved_from = set_difference(s, t);
  const FinSet moved_to = set_difference(t, s);
  SpreadWitness w{s, t, {}};
  for (Index i : common) w.map.emplace_back(i, i);
  for (std::size_t j = 0; j < moved_from.size(); ++j) w.map.emplace_back(moved_from[j], moved_to[j]);
  std::sort(w.map.begin(), w.map.end());
  return w;
}

std::optional<std::pair<FinSet, FinSet>> spreading_violation(const ExplicitFamily& f, Index headroom) {
  if (headroom > f.window())
    throw PreconditionError("headroom " + std::to_string(headroom) + " exceeds window " +
                            std::to_string(f.window()));
  const std::uint64_t allowed =
      (headroom >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << headroom) - 1) & ~((std::uint64_t{1} << f.base()) - 1);
  for (std::uint64_t m : f.masks()) {
    if ((m & ~allowed) != 0)
      throw PreconditionError("member " + to_string(FinSet::from_mask(m)) + " is not below headroom " +
                              std::to_string(headroom));
  }
  // Every spread is reachable by elementary moves i -> i+1 (i+1 not in the
  // set), so closure under those moves is closure under all spreads.
  for (std::uint64_t m : f.masks()) {
    std::uint64_t rest = m;
    while (rest != 0) {
      Index i = static_cast<Index>(std::countr_zero(rest));
      rest &= rest - 1;
      if (i + 1 >= headroom) continue;
      std::uint64_t next = std::uint64_t{1} << (i + 1);
      if (m & next) continue;
      std::uint64_t moved = (m & ~(std::uint64_t{1} << i)) | next;
      if (!f.contains_mask(moved)) return std::pair{FinSet::from_mask(m), FinSet::from_mask(moved)};
    }
  }
  return std::nullopt;
}

bool is_spreading(const ExplicitFamily& f, Index headroom) { return !spreading_violation(f, headroom); }

ExplicitFamily spreading_closure(const ExplicitFamily& f) {
  const Index window = f.window();
  std::unordered_set<std::uint64_t> seen(f.masks().begin(), f.masks().end());
  std::vector<std::uint64_t> stack(f.masks().begin(), f.masks().end());
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    std::uint64_t rest = m;
    while (rest != 0) {
      Index i = static_cast<Index>(std::countr_zero(rest));
      rest &= rest - 1;
      if (i + 1 >= window) continue;
      std::uint64_t next = std::uint64_t{1} << (i + 1);
      if (m & next) continue;
      std::uint64_t moved = (m & ~(std::uint64_t{1} << i)) | next;
      if (seen.insert(moved).second) stack.push_back(moved);
    }
  }
  return ExplicitFamily::from_masks(f.base(), window, {seen.begin(), seen.end()});
}

}  // namespace combfam
