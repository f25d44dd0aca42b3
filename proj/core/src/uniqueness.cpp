#include "combfam/uniqueness.hpp"

#include <algorithm>

#include "combfam/error.hpp"
#include "combfam/spreading.hpp"

namespace combfam {

namespace {

Index resolve(const ExplicitFamily& f, std::optional<Index> horizon) {
  const Index h = horizon.value_or(f.window());
  if (h > f.window() || h < f.base()) throw PreconditionError("horizon must lie in [base, window]");
  return h;
}

bool below(const FinSet& s, Index h) { return s.empty() || s.max() < h; }

// Points of [base, h) outside s.
FinSet room(const FinSet& s, Index base, Index h) { return set_difference(FinSet::interval(base, h), s); }

bool subset_eventually(const ExtensionSet& a, const ExtensionSet& b) {
  // Past both thresholds the sets repeat with period lcm(pa, pb).
  const Index ta = a.tail_threshold().value_or(0), tb = b.tail_threshold().value_or(0);
  Index bound = std::max(ta, tb) + a.period() * b.period();
  if (a.is_finite() && !a.exceptional().empty()) bound = std::max(bound, a.exceptional().max() + 1);
  for (Index n = 0; n < bound; ++n)
    if (a.contains(n) && !b.contains(n)) return false;
  return true;
}

std::size_t count_in(const ExtensionSet& a, const FinSet& s) {
  std::size_t c = 0;
  for (Index i : s) c += a.contains(i) ? 1 : 0;
  return c;
}

}  // namespace

std::string to_string(const ISet& i) { return to_string(i.points) + " below " + std::to_string(i.horizon); }

ISet i_set(const ExplicitFamily& f, const FinSet& s, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  if (!f.contains(s)) throw PreconditionError(to_string(s) + " is not a member");
  if (!below(s, h)) throw PreconditionError(to_string(s) + " reaches past the horizon");
  std::vector<Index> pts;
  for (Index i : room(s, f.base(), h))
    if (!f.contains(s.with(i))) pts.push_back(i);
  return {FinSet::from_unsorted(std::move(pts)), h};
}

ExtensionSet i_set(const LazyFamily& l, const FinSet& s) {
  ExtensionSet out = l.extension_set(s).complement().minus(s);
  return l.base() == 0 ? out : out.minus(FinSet::interval(0, l.base()));
}

ExplicitFamily stratum(const ExplicitFamily& f, std::size_t n, std::size_t k, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  std::vector<FinSet> members;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const FinSet s = f.member(j);
    if (s.size() == n && below(s, h) && i_set(f, s, h).size() <= k) members.push_back(s);
  }
  return ExplicitFamily(f.base(), f.window(), members);
}

ClaimResult claim_check(const ExplicitFamily& f, const FinSet& s, const FinSet& t, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  if (!f.contains(s) || !f.contains(t)) throw PreconditionError("claim_check needs two members");
  if (!is_spread_of(s, t)) throw PreconditionError(to_string(t) + " is not a spread of " + to_string(s));
  const FinSet is = i_set(f, s, h).points, it = i_set(f, t, h).points;
  ClaimResult r;
  r.is = is.size();
  r.it = it.size();
  r.inequality = r.it <= r.is;
  r.step1 = set_difference(it, s).is_subset_of(set_difference(is, t));
  const FinSet it_s = set_intersection(it, s), is_t = set_intersection(is, t);
  r.step2 = it_s.size() <= is_t.size();
  const SpreadWitness sigma = canonical_spread_witness(s, t);
  r.injection = std::all_of(it_s.begin(), it_s.end(), [&](Index j) { return is_t.contains(sigma(j)); });
  return r;
}

LazyClaimResult claim_check(const LazyFamily& l, const FinSet& s, const FinSet& t) {
  if (!l.contains(s) || !l.contains(t)) throw PreconditionError("claim_check needs two members");
  if (!is_spread_of(s, t)) throw PreconditionError(to_string(t) + " is not a spread of " + to_string(s));
  const ExtensionSet is = i_set(l, s), it = i_set(l, t);
  LazyClaimResult r;
  r.is = is.cardinality();
  r.it = it.cardinality();
  r.inequality = !r.is || (r.it && *r.it <= *r.is);
  r.step1 = subset_eventually(it.minus(s), is.minus(t));
  r.step2 = count_in(it, s) <= count_in(is, t);
  const SpreadWitness sigma = canonical_spread_witness(s, t);
  r.injection = std::all_of(s.begin(), s.end(), [&](Index j) { return !it.contains(j) || is.contains(sigma(j)); });
  return r;
}

ClaimScan claim_scan(const ExplicitFamily& f, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  ClaimScan scan;
  const std::vector<FinSet> members = f.members();
  for (const FinSet& s : members) {
    if (!below(s, h)) continue;
    for (const FinSet& t : members) {
      if (t.size() != s.size() || !below(t, h) || !is_spread_of(s, t)) continue;
      ++scan.pairs;
      ClaimResult r = claim_check(f, s, t, h);
      if (!r.ok()) scan.violations.push_back({s, t, r});
    }
  }
  return scan;
}

FinSet initial_segment(const FinSet& x, std::size_t k) {
  const auto e = x.elements();
  return FinSet::from_unsorted(std::vector<Index>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(std::min(k, e.size()))));
}

ExplicitFamily reconstruct_from_strata(const std::vector<ExplicitFamily>& strata, Index base, Index window,
                                       Index horizon) {
  std::vector<FinSet> out;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    for (std::size_t j = 0; j < strata[k].size(); ++j) {
      const FinSet s = strata[k].member(j);
      if (k > 0 && strata[k - 1].contains(s)) continue;  // s ∈ F_{n,k} ∖ F_{n,k−1}
      const FinSet free = room(s, base, horizon);
      const FinSet tau = initial_segment(free, k);
      for (Index i : set_difference(free, tau)) out.push_back(s.with(i));
    }
  }
  return ExplicitFamily(base, window, out);
}

ExplicitFamily reconstruct_level(const ExplicitFamily& f, std::size_t n, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  // |I_s| never exceeds the number of points in [base, h).
  std::vector<ExplicitFamily> strata;
  for (std::size_t k = 0; k <= h - f.base(); ++k) strata.push_back(stratum(f, n, k, h));
  return reconstruct_from_strata(strata, f.base(), f.window(), h);
}

ExplicitFamily level_below(const ExplicitFamily& f, std::size_t n, std::optional<Index> horizon) {
  const Index h = resolve(f, horizon);
  std::vector<FinSet> out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const FinSet s = f.member(j);
    if (s.size() == n + 1 && below(s, h)) out.push_back(s);
  }
  return ExplicitFamily(f.base(), f.window(), out);
}

}  // namespace combfam
