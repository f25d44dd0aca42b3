// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "combfam/census.hpp"
#include "combfam/constructions.hpp"
#include "combfam/iso_search.hpp"
#include "combfam/norm.hpp"
#include "combfam/spreading.hpp"
#include "combfam/uniqueness.hpp"
#include "oracles.hpp"

using namespace combfam;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %2d  %-34s %8.3fs / %gs  %s%s\n", pass ? "PASS" : "FAIL", id, name, secs, limit_s,
              o.detail.c_str(), in_time ? "" : " (over time limit)");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Every subset of [0, w) with at most `k` elements, as FinSets.
std::vector<FinSet> small_sets(Index w, std::size_t k) {
  std::vector<FinSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << w); ++m)
    if (static_cast<std::size_t>(__builtin_popcountll(m)) <= k) out.push_back(FinSet::from_mask(m));
  return out;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, Index w) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::vector<Rational> x(w);
  for (auto& v : x) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

}  // namespace

int main() {
  criterion(1, "schreier singleton ranks", 10, [] {
    for (Index n = 0; n <= 8; ++n) {
      const RankResult r = cb_rank_point(schreier(), FinSet{n});
      if (r.at_least || r.value != OrdinalW2::of(n)) return Outcome{false, fmt("rk({%u}) = %s", n, to_string(r).c_str())};
    }
    return Outcome{true, "n = 0..8"};
  });

  criterion(2, "cube family ranks", 1, [] {
    for (std::uint32_t n = 0; n <= 6; ++n) {
      const RankResult r = family_rank(cube(n));
      const LazyFamily c = cube(n);
      const std::uint32_t brute = oracle::windowed_rank([&](const FinSet& s) { return c.contains(s); }, FinSet{},
                                                        2 * n + 3, 2);
      if (r.at_least || r.value != OrdinalW2::of(n + 1) || brute + 1 != n + 1)
        return Outcome{false, fmt("n = %u: %s, oracle %u", n, to_string(r).c_str(), brute + 1)};
    }
    return Outcome{true, "n = 0..6, windowed oracle agrees"};
  });

  criterion(3, "extreme points vs vertex oracle", 60, [] {
    std::size_t families = 0, points = 0;
    for (Index w = 1; w <= 4; ++w)
      for (const ExplicitFamily& f : oracle::hereditary_families(w)) {
        if (f.size() > 12 || f.size() == 0) continue;
        ++families;
        const std::vector<SignedFunctional> fast = extreme_points(f);
        std::set<std::string> a, b;
        for (const SignedFunctional& g : fast) a.insert(to_string(g));
        for (const SignedFunctional& g : candidate_functionals(f))
          if (is_extreme_brute(f, g)) b.insert(to_string(g));
        if (a != b) return Outcome{false, "disagreement on " + one_line(f)};
        points += fast.size();
      }
    return Outcome{true, fmt("%zu families, %zu extreme points", families, points)};
  });

  criterion(4, "norm via extreme points", 30, [] {
    std::mt19937_64 rng(20260101);
    for (int i = 0; i < 500; ++i) {
      const Index w = 1 + static_cast<Index>(i % 6);
      const ExplicitFamily f = oracle::random_hereditary(rng, w, 1 + i % 4, 0.5);
      const std::vector<Rational> xs = random_vector(rng, w);
      const SparseVector x = SparseVector::dense(xs);
      Rational best = 0;
      for (const SignedFunctional& g : extreme_points(f)) best = std::max(best, Rational(abs(functional_apply(g, x))));
      const Rational n = norm(f, x);
      if (n != best || n != oracle::norm(f, xs))
        return Outcome{false, fmt("pair %d: norm %s, extremes %s", i, to_string(n).c_str(), to_string(best).c_str())};
    }
    return Outcome{true, "500 pairs exact"};
  });

  criterion(5, "uniqueness census M = 2, 3, 4", 300, [] {
    std::string detail;
    for (Index m = 2; m <= 4; ++m) {
      const std::size_t brute = oracle::hereditary_spreading_families(m, 3 * m, true).size();
      const CensusReport r = uniqueness_census(m, 3 * m, {{}, 4});
      if (r.families != brute) return Outcome{false, fmt("M = %u: %zu families, oracle %zu", m, r.families, brute)};
      if (!r.counterexamples.empty())
        return Outcome{false, fmt("M = %u: %zu counterexamples", m, r.counterexamples.size())};
      detail += fmt("M=%u: %zu fam/%zu pairs; ", m, r.families, r.pairs);
    }
    return Outcome{true, detail + "0 counterexamples"};
  });

  criterion(6, "I-set claim over census", 60, [] {
    std::size_t pairs = 0, bad = 0;
    for (Index m = 1; m <= 4; ++m)
      for (bool strict : {true, false})
        for (const ExplicitFamily& f : enumerate_hereditary_spreading(m, 3 * m, {strict})) {
          const ClaimScan s = claim_scan(f, m);
          pairs += s.pairs;
          bad += s.violations.size();
        }
    return Outcome{bad == 0, fmt("%zu spread pairs, %zu violations", pairs, bad)};
  });

  criterion(7, "level reconstruction", 60, [] {
    std::size_t levels = 0, bad = 0;
    for (Index m = 1; m <= 4; ++m)
      for (bool strict : {true, false})
        for (const ExplicitFamily& f : enumerate_hereditary_spreading(m, 3 * m, {strict}))
          for (std::size_t n = 0; n < m; ++n) {
            ++levels;
            if (reconstruct_level(f, n, m) != level_below(f, n, m)) ++bad;
          }
    return Outcome{bad == 0, fmt("%zu levels, %zu violations", levels, bad)};
  });

  criterion(8, "permuted pair, window 6", 10, [] {
    const auto [f, g] = permuted_pair_example();
    const ExplicitFamily tf = truncate(f, 6), tg = truncate(g, 6);
    const auto pi = find_pi_homeomorphism(tf, tg);
    if (!pi) return Outcome{false, "no permutation found"};
    if (apply_permutation(tf, *pi) != tg) return Outcome{false, "returned " + to_string(*pi) + " does not map F to G"};
    return Outcome{true, "pi = " + to_string(*pi)};
  });

  criterion(9, "homeomorphic, not pi, window 8", 30, [] {
    const auto [f, g] = homeo_not_pi_pair();
    const ExplicitFamily tf = truncate(f, 8), tg = truncate(g, 8);
    if (auto pi = find_pi_homeomorphism(tf, tg)) return Outcome{false, "found " + to_string(*pi)};
    if (auto pi = oracle::pi_search(tf, tg)) return Outcome{false, "brute force found " + to_string(*pi)};
    return Outcome{true, "none; brute force over 7! agrees"};
  });

  criterion(10, "adjacent-removed reachability", 60, [] {
    const ExplicitFamily f = truncate(adjacent_pairs_removed(), 6);
    const ReachabilityReport r = regular_reachability(f, 5, 15);
    // Brute cross-check: both sides keep members in [0, 5), and F uses all
    // five points, so any π maps [0, 5) onto itself.
    const ExplicitFamily small = shift_to_base_zero(f);
    const ExplicitFamily f5(0, 5, small.members());
    std::size_t brute = 0;
    for (const ExplicitFamily& c : enumerate_hereditary_spreading(5, 15, {false})) {
      if (oracle::pi_search(f5, ExplicitFamily(0, 5, c.members()))) ++brute;
    }
    if (!r.matches.empty() || brute != 0)
      return Outcome{false, fmt("%zu matches, brute %zu", r.matches.size(), brute)};
    return Outcome{true, fmt("%zu candidates, 0 matches", r.candidates)};
  });

  criterion(11, "isometry criterion vs norms", 60, [] {
    std::mt19937_64 rng(7);
    std::size_t isometric = 0;
    for (int i = 0; i < 200; ++i) {
      const Index w = 2 + static_cast<Index>(i % 5);
      const ExplicitFamily f = oracle::random_hereditary(rng, w, 1 + i % 3, 0.5);
      std::vector<Index> table(w);
      for (Index k = 0; k < w; ++k) table[k] = k;
      std::shuffle(table.begin(), table.end(), rng);
      const Permutation pi(table);
      std::vector<Index> neg;
      for (Index k = 0; k < w; ++k)
        if (rng() & 1) neg.push_back(k);
      const SignedPermutationOperator t{pi, FinSet::from_unsorted(neg)};
      // Half the pairs are images under π, the rest independent draws or
      // near misses.
      ExplicitFamily g = apply_permutation(f, pi);
      if (i % 2 == 1) g = (i % 4 == 1) ? oracle::random_hereditary(rng, w, 1 + i % 3, 0.5)
                                       : apply_permutation(f, Permutation::identity(w));
      const bool fast = is_isometry(t, f, g).isometry;
      // Exhaustive: ‖Tx‖_G = ‖x‖_F for every x ∈ {−1, 0, 1}^w.
      std::size_t total = 1;
      for (Index k = 0; k < w; ++k) total *= 3;
      bool brute = true;
      for (std::size_t code = 0; brute && code < total; ++code) {
        std::size_t c = code;
        std::vector<Rational> x(w), tx(w);
        for (Index k = 0; k < w; ++k, c /= 3) x[k] = static_cast<int>(c % 3) - 1;
        for (Index k = 0; k < w; ++k) tx[table[k]] = (t.negated.contains(k) ? -1 : 1) * x[k];
        if (oracle::norm(f, x) != oracle::norm(g, tx)) brute = false;
      }
      if (fast != brute) return Outcome{false, fmt("pair %d: criterion %d, norms %d", i, fast, brute)};
      isometric += fast;
    }
    return Outcome{true, fmt("200 pairs, %zu isometric", isometric)};
  });

  criterion(12, "sorted dominance vs injections", 30, [] {
    const std::vector<FinSet> sets = small_sets(10, 5);
    std::size_t pairs = 0, spreads = 0;
    for (const FinSet& s : sets)
      for (const FinSet& t : sets) {
        ++pairs;
        const bool fast = is_spread_of(s, t);
        if (fast != oracle::spread_by_injection(s, t))
          return Outcome{false, "disagreement on " + to_string(s) + " -> " + to_string(t)};
        spreads += fast;
      }
    return Outcome{true, fmt("%zu pairs, %zu spreads", pairs, spreads)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
