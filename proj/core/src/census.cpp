#include "combfam/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "combfam/error.hpp"

namespace combfam {

namespace {

void check_sizes(Index m, Index n) {
  if (m > 8) throw PreconditionError("census members beyond 8 points are out of reach");
  if (n < 3 * m) throw PreconditionError("window must be at least 3M for headroom");
  if (n > kMaxWindow) throw PreconditionError("window exceeds " + std::to_string(kMaxWindow));
}

int sum_of(std::uint64_t mask) {
  int s = 0;
  for (std::uint64_t r = mask; r; r &= r - 1) s += std::countr_zero(r);
  return s;
}

}  // namespace

void for_each_hereditary_spreading(Index m, Index n, EnumerationOptions opt,
                                   const std::function<void(const ExplicitFamily&)>& sink) {
  check_sizes(m, n);
  // Candidate members; everything they force (immediate subsets, elementary
  // spreads i → i+1 inside [0, M)) comes earlier in this order.
  const std::size_t min_size = opt.require_singletons ? 2 : 1;
  std::vector<std::uint64_t> items;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) >= min_size) items.push_back(mask);
  std::sort(items.begin(), items.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const int sa = sum_of(a), sb = sum_of(b);
    if (sa != sb) return sa > sb;
    return mask_less(a, b);
  });

  std::vector<std::vector<std::uint64_t>> forced(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) {
    const std::uint64_t v = items[j];
    for (std::uint64_t r = v; r; r &= r - 1) {
      const std::uint64_t bit = r & (~r + 1);
      const std::uint64_t sub = v & ~bit;
      if (static_cast<std::size_t>(std::popcount(sub)) >= min_size) forced[j].push_back(sub);
      const std::uint64_t up = bit << 1;
      if (up < (std::uint64_t{1} << m) && !(v & up)) forced[j].push_back((v & ~bit) | up);
    }
  }

  std::vector<std::uint64_t> base_members{0};
  if (opt.require_singletons)
    for (Index i = 0; i < m; ++i) base_members.push_back(std::uint64_t{1} << i);

  std::vector<std::uint64_t> chosen;
  std::vector<bool> in(items.size(), false);
  auto position = [&](std::uint64_t mask) {
    return static_cast<std::size_t>(std::find(items.begin(), items.end(), mask) - items.begin());
  };
  std::vector<std::vector<std::size_t>> forced_pos(items.size());
  for (std::size_t j = 0; j < items.size(); ++j)
    for (std::uint64_t f : forced[j]) forced_pos[j].push_back(position(f));

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == items.size()) {
      std::vector<std::uint64_t> masks = base_members;
      masks.insert(masks.end(), chosen.begin(), chosen.end());
      sink(ExplicitFamily::from_masks(0, n, std::move(masks)));
      return;
    }
    self(self, j + 1);
    if (std::all_of(forced_pos[j].begin(), forced_pos[j].end(), [&](std::size_t p) { return in[p]; })) {
      in[j] = true;
      chosen.push_back(items[j]);
      self(self, j + 1);
      chosen.pop_back();
      in[j] = false;
    }
  };
  rec(rec, 0);
}

std::vector<ExplicitFamily> enumerate_hereditary_spreading(Index m, Index n, EnumerationOptions opt) {
  std::vector<ExplicitFamily> out;
  for_each_hereditary_spreading(m, n, opt, [&](const ExplicitFamily& f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string one_line(const ExplicitFamily& f) {
  std::string out = std::to_string(f.base()) + "/" + std::to_string(f.window()) + ":";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ';';
    const FinSet s = f.member(i);
    if (s.empty()) {
      out += '-';
      continue;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(s[k]);
    }
  }
  return out;
}

CensusReport uniqueness_census(Index m, Index n, CensusOptions opt) {
  const std::vector<ExplicitFamily> fams = enumerate_hereditary_spreading(m, n, opt.enumeration);
  CensusReport r;
  r.members = m;
  r.window = n;
  r.families = fams.size();
  r.pairs = fams.size() < 2 ? 0 : fams.size() * (fams.size() - 1) / 2;
  r.records.resize(fams.size());

  std::atomic<std::size_t> next{0};
  std::mutex sink;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < fams.size();) {
        FamilyRecord rec{one_line(fams[i]), point_signatures(fams[i]), automorphisms(fams[i]).total.get_str()};
        std::vector<Counterexample> found;
        for (std::size_t j = i + 1; j < fams.size(); ++j)
          if (auto pi = find_pi_homeomorphism(fams[i], fams[j])) found.push_back({i, j, fams[i], fams[j], *pi});
        std::lock_guard lock(sink);
        r.records[i] = std::move(rec);
        r.counterexamples.insert(r.counterexamples.end(), found.begin(), found.end());
      }
    } catch (...) {
      std::lock_guard lock(sink);
      if (!failure) failure = std::current_exception();
      next = fams.size();
    }
  };
  const unsigned k = std::max(1u, opt.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < k; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(r.counterexamples.begin(), r.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::pair(a.first, a.second) < std::pair(b.first, b.second);
            });
  return r;
}

std::string format_census(const CensusReport& r) {
  std::string out = "families: " + std::to_string(r.families) + ", pairs: " + std::to_string(r.pairs) +
                    ", counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
  for (const Counterexample& c : r.counterexamples)
    out += "counterexample " + one_line(c.f) + " ~ " + one_line(c.g) + " via " + to_string(c.pi) + "\n";
  return out;
}

std::string format_census_machine(const CensusReport& r) {
  using nlohmann::json;
  std::string out;
  json summary = {{"kind", "census"},
                  {"members", r.members},
                  {"window", r.window},
                  {"families", r.families},
                  {"pairs", r.pairs}};
  json ce = json::array();
  for (const Counterexample& c : r.counterexamples)
    ce.push_back({{"f", one_line(c.f)}, {"g", one_line(c.g)}, {"pi", to_string(c.pi)}});
  summary["counterexamples"] = ce;
  out += summary.dump() + "\n";
  for (const FamilyRecord& rec : r.records) {
    json sig = json::array();
    for (const PointSignature& p : rec.signature) sig.push_back(to_string(p));
    out += json{{"kind", "family"}, {"family", rec.serialization}, {"signature", sig},
                {"automorphisms", rec.automorphisms}}
               .dump() +
           "\n";
  }
  return out;
}

ExplicitFamily shift_to_base_zero(const ExplicitFamily& f) {
  const Index b = f.base();
  std::vector<std::uint64_t> masks(f.masks().begin(), f.masks().end());
  for (auto& mk : masks) mk >>= b;
  return ExplicitFamily::from_masks(0, f.window() - b, std::move(masks));
}

ReachabilityReport regular_reachability(const ExplicitFamily& f, Index m, Index n) {
  ExplicitFamily g = shift_to_base_zero(f);
  if (g.support_mask() >> m) throw PreconditionError("family members must lie in the first M points");
  g = g.rewindowed(n);
  ReachabilityReport r;
  r.members = m;
  r.window = n;
  std::size_t index = 0;
  for (const ExplicitFamily& cand : enumerate_hereditary_spreading(m, n, {.require_singletons = false})) {
    ++r.candidates;
    if (auto pi = find_pi_homeomorphism(g, cand)) r.matches.push_back({index, cand, *pi});
    ++index;
  }
  return r;
}

}  // namespace combfam
