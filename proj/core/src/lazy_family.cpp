#include "combfam/lazy_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "combfam/error.hpp"

namespace combfam {

Index TailProfile::representative(Index residue) const noexcept {
  const Index p = period();
  Index n = threshold + ((residue + p - threshold % p) % p);
  return n;
}

bool TailProfile::has_tail() const noexcept {
  return std::any_of(classes.begin(), classes.end(),
                     [](const TailClass& c) { return c.kind != TailClass::Kind::Absent; });
}

TailProfile TailProfile::none(const FinSet& s) {
  return uniform(s.empty() ? 0 : s.max() + 1, TailClass::absent());
}

TailProfile TailProfile::uniform(Index threshold, TailClass c) {
  TailProfile t;
  t.threshold = threshold;
  t.classes = {c};
  return t;
}

OrdinalW2 FamilyNode::rank(const FinSet& s) const {
  const TailProfile t = tail(s);
  OrdinalW2 best = OrdinalW2::of(0);
  for (Index k = 0; k < t.period(); ++k) {
    const TailClass& c = t.classes[k];
    OrdinalW2 cand;
    switch (c.kind) {
      case TailClass::Kind::Absent:
        continue;
      case TailClass::Kind::Growing:
        cand = OrdinalW2::omega(c.limit + 1);
        break;
      case TailClass::Kind::Constant:
        cand = rank(s.with(t.representative(k))).successor();
        break;
    }
    best = std::max(best, cand);
  }
  return best;
}

LazyFamily::LazyFamily(std::shared_ptr<const FamilyNode> node) : node_(std::move(node)) {
  if (!node_) throw PreconditionError("null family node");
}

ExtensionSet LazyFamily::extension_set(const FinSet& s) const {
  if (!node_->contains(s)) throw PreconditionError(to_string(s) + " is not a member of " + descriptor());
  const TailProfile t = node_->tail(s);
  std::vector<Index> below;
  for (Index n = 0; n < t.threshold; ++n)
    if (!s.contains(n) && node_->contains(s.with(n))) below.push_back(n);
  std::vector<bool> residues(t.period());
  for (Index k = 0; k < t.period(); ++k) residues[k] = t.classes[k].kind != TailClass::Kind::Absent;
  return ExtensionSet::eventually_periodic(FinSet::from_unsorted(std::move(below)), t.threshold,
                                           std::move(residues));
}

OrdinalW2 LazyFamily::rank(const FinSet& s) const {
  if (!node_->contains(s)) throw PreconditionError(to_string(s) + " is not a member of " + descriptor());
  return node_->rank(s);
}

bool membership(const LazyFamily& l, const FinSet& s) { return l.contains(s); }

ExtensionSet extension_set(const LazyFamily& l, const FinSet& s) { return l.extension_set(s); }

namespace {

class DerivativeNode final : public FamilyNode {
 public:
  explicit DerivativeNode(LazyFamily inner) : inner_(std::move(inner)) {}

  bool contains(const FinSet& s) const override {
    return inner_.contains(s) && inner_.tail(s).has_tail();
  }

  TailProfile tail(const FinSet& s) const override {
    TailProfile t = inner_.tail(s);
    if (!inner_.contains(s)) {
      // Non-members of a closed family have no accumulating extensions here.
      for (auto& c : t.classes)
        if (c.kind == TailClass::Kind::Constant) c = TailClass::absent();
      return t;
    }
    Index threshold = t.threshold;
    for (Index k = 0; k < t.period(); ++k) {
      TailClass& c = t.classes[k];
      if (c.kind == TailClass::Kind::Constant) {
        if (inner_.node().rank(s.with(t.representative(k))) == OrdinalW2::of(0)) c = TailClass::absent();
      } else if (c.kind == TailClass::Kind::Growing && c.limit == 0) {
        // Ranks are nondecreasing and unbounded along the class: find where they reach 1.
        Index n = t.representative(k);
        for (int step = 0;; ++step, n += t.period()) {
          if (step > 100000) throw UnsupportedDescriptor("growing tail never reaches rank 1 in " + descriptor());
          if (inner_.node().rank(s.with(n)) >= OrdinalW2::of(1)) break;
        }
        threshold = std::max(threshold, n);
      }
    }
    t.threshold = threshold;
    return t;
  }

  OrdinalW2 rank(const FinSet& s) const override { return inner_.node().rank(s).after_derivative(); }
  std::size_t size_bound(Index m) const override { return inner_.size_bound(m); }
  bool hereditary() const override { return inner_.hereditary(); }
  Index base() const override { return inner_.base(); }

  std::string descriptor() const override {
    std::string d = inner_.descriptor();
    return "derive " + (d.find(' ') == std::string::npos ? d : "(" + d + ")");
  }

 private:
  LazyFamily inner_;
};

// Witness sequence for a limit rank ω·(q+1): six consecutive points of a
// growing class, ranks nondecreasing with limit coefficient q and strictly
// larger at the end.
void certify_limit(const LazyFamily& l, const FinSet& s, OrdinalW2 value, RankResult& out) {
  const TailProfile t = l.tail(s);
  for (Index k = 0; k < t.period(); ++k) {
    const TailClass& c = t.classes[k];
    if (c.kind != TailClass::Kind::Growing || c.limit + 1 != value.limit) continue;
    std::vector<std::pair<FinSet, OrdinalW2>> seq;
    Index n = t.representative(k);
    for (int j = 0; j < 6; ++j, n += t.period()) {
      FinSet ext = s.with(n);
      seq.emplace_back(ext, l.node().rank(ext));
    }
    bool ok = seq.back().second.finite > seq.front().second.finite;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      ok = ok && seq[j].second.limit == c.limit;
      if (j > 0) ok = ok && seq[j - 1].second <= seq[j].second;
    }
    if (!ok)
      throw UnsupportedDescriptor("limit-rank certificate failed for " + to_string(s) + " in " + l.descriptor());
    out.witnesses = std::move(seq);
    return;
  }
  throw UnsupportedDescriptor("no growing tail certifies rank " + to_string(value) + " of " + to_string(s));
}

}  // namespace

LazyFamily derivative(const LazyFamily& l) { return LazyFamily(std::make_shared<DerivativeNode>(l)); }

RankResult cb_rank_point(const LazyFamily& l, const FinSet& s, OrdinalW2 budget) {
  const OrdinalW2 value = l.rank(s);
  RankResult out;
  if (value.is_finite()) {
    // Iterate the derivative: s survives exactly `value` stages.
    const std::uint32_t stop = std::min<std::uint32_t>(value.finite + 1, budget.is_finite() ? budget.finite + 1 : value.finite + 1);
    LazyFamily stage = l;
    for (std::uint32_t k = 1; k <= stop; ++k) {
      stage = derivative(stage);
      const bool expected = k <= value.finite;
      if (stage.contains(s) != expected)
        throw std::logic_error("derivative iteration disagrees with rank of " + to_string(s) + " in " +
                               l.descriptor());
      out.stages_checked = k;
    }
  } else if (value.is_limit()) {
    certify_limit(l, s, value, out);
  }
  if (budget < value) {
    out.value = budget;
    out.at_least = true;
  } else {
    out.value = value;
  }
  return out;
}

RankResult family_rank(const LazyFamily& l, OrdinalW2 budget) {
  if (!l.contains(FinSet{})) throw PreconditionError("family_rank needs the empty set as a member");
  RankResult r = cb_rank_point(l, FinSet{}, budget);
  if (!r.at_least) r.value = r.value.successor();
  return r;
}

std::string to_string(const RankResult& r) { return (r.at_least ? ">=" : "") + to_string(r.value); }

ExplicitFamily truncate(const LazyFamily& l, Index window) {
  const Index base = l.base();
  window = std::max(window, base);
  if (window > kMaxWindow) throw PreconditionError("truncation window exceeds " + std::to_string(kMaxWindow));
  std::vector<std::uint64_t> masks;
  constexpr std::size_t kCap = 5'000'000;
  if (l.hereditary()) {
    // Every member is reached by adding its elements in increasing order.
    if (!l.contains(FinSet{})) return ExplicitFamily::from_masks(base, window, {});
    std::vector<FinSet> stack{FinSet{}};
    while (!stack.empty()) {
      FinSet s = std::move(stack.back());
      stack.pop_back();
      masks.push_back(s.mask());
      if (masks.size() > kCap) throw SearchOverflow("truncation exceeds " + std::to_string(kCap) + " members");
      for (Index n = s.empty() ? base : s.max() + 1; n < window; ++n) {
        FinSet t = s.with(n);
        if (l.contains(t)) stack.push_back(std::move(t));
      }
    }
  } else {
    if (window - base > 24) throw PreconditionError("truncating a non-hereditary family is limited to 24 points");
    const std::size_t bound = window == base ? 0 : l.size_bound(window - 1);
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index next) -> void {
      FinSet s = FinSet::from_unsorted(cur);
      if (l.contains(s)) masks.push_back(s.mask());
      if (cur.size() >= bound) return;
      for (Index n = next; n < window; ++n) {
        cur.push_back(n);
        self(self, n + 1);
        cur.pop_back();
      }
    };
    rec(rec, base);
  }
  return ExplicitFamily::from_masks(base, window, std::move(masks));
}

bool singleton_density_check(const LazyFamily& l, Index alpha_bound, Index window) {
  if (!l.hereditary()) throw PreconditionError("singleton density check needs a hereditary family");
  for (Index alpha = l.base(); alpha < alpha_bound; ++alpha) {
    FinSet s{alpha};
    if (!l.contains(s)) return false;
    const Index floor = std::max(window, alpha + 1);
    for (;;) {
      const ExtensionSet ext = l.extension_set(s);
      if (ext.empty()) break;  // maximal
      Index start = std::max(floor, s.max() + 1);
      std::optional<Index> pick;
      if (ext.has_tail()) {
        Index from = std::max(start, *ext.tail_threshold());
        for (Index n = start; n < from + ext.period(); ++n)
          if (ext.contains(n)) {
            pick = n;
            break;
          }
      } else {
        for (Index n : ext.exceptional())
          if (n >= start) {
            pick = n;
            break;
          }
      }
      if (!pick) return false;
      s = s.with(*pick);
      if (s.size() > l.size_bound(alpha) + 1) return false;
    }
  }
  return true;
}

}  // namespace combfam
