#include "combfam/iso_search.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "combfam/error.hpp"

namespace combfam {

PointSignature point_signature(const ExplicitFamily& f, Index alpha) {
  PointSignature sig;
  sig.size_counts.assign(f.max_member_size() + 1, 0);
  if (alpha >= f.window()) return sig;
  const std::uint64_t bit = std::uint64_t{1} << alpha;
  for (std::uint64_t m : f.masks()) {
    if (!(m & bit)) continue;
    const auto k = static_cast<std::uint32_t>(std::popcount(m));
    ++sig.size_counts[k];
    sig.depth = std::max(sig.depth, k);
    if (k == 1) sig.singleton = true;
    if (k == 2) ++sig.extensions;
  }
  return sig;
}

std::vector<PointSignature> point_signatures(const ExplicitFamily& f) {
  std::vector<PointSignature> out;
  out.reserve(f.window());
  for (Index a = 0; a < f.window(); ++a) out.push_back(point_signature(f, a));
  return out;
}

std::vector<PointSignature> point_signatures(const ExplicitFamily& truncation, const LazyFamily& source) {
  std::vector<PointSignature> out = point_signatures(truncation);
  for (Index a = 0; a < truncation.window(); ++a)
    if (source.contains(FinSet{a})) out[a].rank = source.rank(FinSet{a});
  return out;
}

std::string to_string(const PointSignature& sig) {
  std::string out = "[";
  for (std::size_t k = 1; k < sig.size_counts.size(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(sig.size_counts[k]);
  }
  out += "]/" + std::to_string(sig.depth) + "/" + (sig.singleton ? "1" : "0") + "/" + std::to_string(sig.extensions);
  if (sig.rank) out += "/r=" + to_string(*sig.rank);
  return out;
}

namespace {

std::vector<std::size_t> size_profile(const ExplicitFamily& f) {
  std::vector<std::size_t> p(f.window() + 1, 0);
  for (std::uint64_t m : f.masks()) ++p[static_cast<std::size_t>(std::popcount(m))];
  return p;
}

/// Backtracking over π(base), π(base+1), ... with ascending candidates.
class Search {
 public:
  Search(const ExplicitFamily& f, const ExplicitFamily& g, std::vector<PointSignature> sf,
         std::vector<PointSignature> sg)
      : f_(f), g_(g), sf_(std::move(sf)), sg_(std::move(sg)), by_max_(f.window()) {
    for (std::uint64_t m : f.masks())
      if (m) by_max_[static_cast<std::size_t>(63 - std::countl_zero(m))].push_back(m);
    table_.resize(f.window());
    for (Index i = 0; i < f.base(); ++i) table_[i] = i;
    used_.assign(f.window(), false);
    for (Index i = 0; i < f.base(); ++i) used_[i] = true;
  }

  bool compatible() const {
    if (f_.size() != g_.size() || size_profile(f_) != size_profile(g_)) return false;
    std::vector<PointSignature> a(sf_.begin() + f_.base(), sf_.end()), b(sg_.begin() + g_.base(), sg_.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  /// `pin_free`: free points map to themselves (automorphism mode) instead
  /// of the least unused free target.
  void run(const std::function<bool(const Permutation&)>& on_solution, bool pin_free) {
    on_solution_ = &on_solution;
    pin_free_ = pin_free;
    stop_ = false;
    step(f_.base());
  }

 private:
  bool members_ok(Index alpha) const {
    for (std::uint64_t m : by_max_[alpha]) {
      std::uint64_t img = 0;
      for (std::uint64_t r = m; r; r &= r - 1) img |= std::uint64_t{1} << table_[static_cast<std::size_t>(std::countr_zero(r))];
      if (!g_.contains_mask(img)) return false;
    }
    return true;
  }

  void step(Index alpha) {
    if (stop_) return;
    if (alpha == f_.window()) {
      if (!(*on_solution_)(Permutation(table_))) stop_ = true;
      return;
    }
    const bool free = sf_[alpha].is_free();
    for (Index beta = f_.base(); beta < f_.window() && !stop_; ++beta) {
      if (used_[beta] || !(sg_[beta] == sf_[alpha])) continue;
      if (free && pin_free_ && beta != alpha) continue;
      table_[alpha] = beta;
      used_[beta] = true;
      if (members_ok(alpha)) step(alpha + 1);
      used_[beta] = false;
      // Free points never constrain members: the least free target is as
      // good as any, so alternatives are not explored.
      if (free) break;
    }
  }

  const ExplicitFamily& f_;
  const ExplicitFamily& g_;
  std::vector<PointSignature> sf_, sg_;
  std::vector<std::vector<std::uint64_t>> by_max_;
  std::vector<Index> table_;
  std::vector<bool> used_;
  const std::function<bool(const Permutation&)>* on_solution_ = nullptr;
  bool pin_free_ = false;
  bool stop_ = false;
};

}  // namespace

std::optional<Permutation> find_pi_homeomorphism(const ExplicitFamily& f, const ExplicitFamily& g) {
  if (f.window() != g.window() || f.base() != g.base())
    throw PreconditionError("find_pi_homeomorphism needs families on the same window and base");
  Search search(f, g, point_signatures(f), point_signatures(g));
  if (!search.compatible()) return std::nullopt;
  std::optional<Permutation> found;
  search.run(
      [&](const Permutation& p) {
        found = p;
        return false;
      },
      false);
  return found;
}

namespace {

AutomorphismReport automorphisms_with(const ExplicitFamily& f, const std::vector<PointSignature>& sig,
                                      std::size_t cap) {
  AutomorphismReport r;
  Search search(f, f, sig, sig);
  search.run(
      [&](const Permutation& p) {
        if (r.support.size() >= cap)
          throw SearchOverflow("more than " + std::to_string(cap) + " support automorphisms");
        r.support.push_back(p);
        return true;
      },
      true);
  const std::uint64_t support = f.support_mask();
  for (Index a = f.base(); a < f.window(); ++a)
    if (!(support >> a & 1)) ++r.free_points;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), r.free_points);
  r.total = fact * static_cast<unsigned long>(r.support.size());
  return r;
}

}  // namespace

AutomorphismReport automorphisms(const ExplicitFamily& f, std::size_t cap) {
  return automorphisms_with(f, point_signatures(f), cap);
}

AutomorphismReport automorphisms(const ExplicitFamily& truncation, const LazyFamily& source, std::size_t cap) {
  return automorphisms_with(truncation, point_signatures(truncation, source), cap);
}

}  // namespace combfam
