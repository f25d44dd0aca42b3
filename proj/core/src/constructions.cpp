#include "combfam/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "combfam/error.hpp"

namespace combfam {

namespace {

std::string wrap(const std::string& d) { return d.find(' ') == std::string::npos ? d : "(" + d + ")"; }

Index past(const FinSet& s) { return s.empty() ? 0 : s.max() + 1; }

class CubeNode final : public FamilyNode {
 public:
  explicit CubeNode(std::uint32_t n) : n_(n) {}
  bool contains(const FinSet& s) const override { return s.size() <= n_; }
  TailProfile tail(const FinSet& s) const override {
    if (s.size() >= n_) return TailProfile::none(s);
    return TailProfile::uniform(past(s), TailClass::constant());
  }
  OrdinalW2 rank(const FinSet& s) const override { return OrdinalW2::of(n_ - static_cast<std::uint32_t>(s.size())); }
  std::size_t size_bound(Index) const override { return n_; }
  bool hereditary() const override { return true; }
  Index base() const override { return 0; }
  std::string descriptor() const override { return "cube " + std::to_string(n_); }

 private:
  std::uint32_t n_;
};

class SchreierNode final : public FamilyNode {
 public:
  bool contains(const FinSet& s) const override { return s.empty() || s.size() <= std::size_t{s.min()} + 1; }
  TailProfile tail(const FinSet& s) const override {
    if (s.empty()) return TailProfile::uniform(0, TailClass::growing(0));
    if (!contains(s) || s.size() + 1 > std::size_t{s.min()} + 1) return TailProfile::none(s);
    return TailProfile::uniform(past(s), TailClass::constant());
  }
  std::size_t size_bound(Index m) const override { return std::size_t{m} + 1; }
  bool hereditary() const override { return true; }
  Index base() const override { return 0; }
  std::string descriptor() const override { return "schreier"; }
};

class BlockSchreierNode final : public FamilyNode {
 public:
  explicit BlockSchreierNode(std::uint32_t m) : m_(m) {}
  bool contains(const FinSet& s) const override {
    if (s.empty()) return true;
    const Index b = s.min() % m_;
    for (Index i : s)
      if (i % m_ != b) return false;
    return s.size() <= std::size_t{s.min() / m_} + 1;
  }
  TailProfile tail(const FinSet& s) const override {
    TailProfile t;
    if (s.empty()) {
      t.threshold = 0;
      t.classes.assign(m_, TailClass::growing(0));
      return t;
    }
    t.threshold = past(s);
    t.classes.assign(m_, TailClass::absent());
    if (contains(s) && s.size() + 1 <= std::size_t{s.min() / m_} + 1) t.classes[s.min() % m_] = TailClass::constant();
    return t;
  }
  std::size_t size_bound(Index x) const override { return std::size_t{x / m_} + 1; }
  bool hereditary() const override { return true; }
  Index base() const override { return 0; }
  std::string descriptor() const override { return "block-schreier " + std::to_string(m_); }

 private:
  std::uint32_t m_;
};

class InitialPairsNode final : public FamilyNode {
 public:
  bool contains(const FinSet& s) const override {
    if (s.empty()) return true;
    if (s.size() > std::size_t{s.min()} + 1) return false;
    return s.size() < 2 || s[1] != s[0] + 1;
  }
  TailProfile tail(const FinSet& s) const override {
    if (s.empty()) return TailProfile::uniform(0, TailClass::growing(0));
    if (!contains(s) || s.size() + 1 > std::size_t{s.min()} + 1) return TailProfile::none(s);
    // Past max + 1 the new point never forms the initial pair.
    return TailProfile::uniform(s.max() + 2, TailClass::constant());
  }
  std::size_t size_bound(Index m) const override { return std::size_t{m} + 1; }
  bool hereditary() const override { return false; }
  Index base() const override { return 0; }
  std::string descriptor() const override { return "initial-pairs"; }
};

class AdjacentRemovedNode final : public FamilyNode {
 public:
  bool contains(const FinSet& s) const override {
    if (s.empty()) return true;
    if (s.size() > 2 || s.min() < 1) return false;
    return s.size() < 2 || s[1] != s[0] + 1;
  }
  TailProfile tail(const FinSet& s) const override {
    if (s.empty()) return TailProfile::uniform(1, TailClass::constant());
    if (s.size() == 1 && contains(s)) return TailProfile::uniform(s.max() + 2, TailClass::constant());
    return TailProfile::none(s);
  }
  std::size_t size_bound(Index) const override { return 2; }
  bool hereditary() const override { return true; }
  Index base() const override { return 1; }
  std::string descriptor() const override { return "adjacent-removed"; }
};

TailProfile raise_threshold(TailProfile t, Index floor) {
  // Classes are keyed by n mod period, so moving the threshold keeps them valid.
  t.threshold = std::max(t.threshold, floor);
  return t;
}

class RemoveSetsNode final : public FamilyNode {
 public:
  RemoveSetsNode(LazyFamily inner, std::vector<FinSet> removed) : inner_(std::move(inner)), removed_(std::move(removed)) {
    std::sort(removed_.begin(), removed_.end());
    removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
    for (const FinSet& r : removed_) horizon_ = std::max(horizon_, past(r));
  }
  bool contains(const FinSet& s) const override {
    return inner_.contains(s) && !std::binary_search(removed_.begin(), removed_.end(), s);
  }
  TailProfile tail(const FinSet& s) const override { return raise_threshold(inner_.tail(s), horizon_); }
  std::size_t size_bound(Index m) const override { return inner_.size_bound(m); }
  bool hereditary() const override { return inner_.hereditary(); }
  Index base() const override { return inner_.base(); }
  std::string descriptor() const override {
    std::string d = "remove";
    for (const FinSet& r : removed_) d += " " + to_string(r);
    return d + " " + wrap(inner_.descriptor());
  }

 private:
  LazyFamily inner_;
  std::vector<FinSet> removed_;
  Index horizon_ = 0;
};

class RestrictNode final : public FamilyNode {
 public:
  RestrictNode(LazyFamily inner, FinSet excluded) : inner_(std::move(inner)), excluded_(std::move(excluded)) {
    base_ = inner_.base();
    while (excluded_.contains(base_)) ++base_;
  }
  bool contains(const FinSet& s) const override {
    return inner_.contains(s) && set_intersection(s, excluded_).empty();
  }
  TailProfile tail(const FinSet& s) const override {
    if (!set_intersection(s, excluded_).empty()) return TailProfile::none(s);
    return raise_threshold(inner_.tail(s), past(excluded_));
  }
  std::size_t size_bound(Index m) const override { return inner_.size_bound(m); }
  bool hereditary() const override { return inner_.hereditary(); }
  Index base() const override { return base_; }
  std::string descriptor() const override { return "restrict !" + to_string(excluded_) + " " + wrap(inner_.descriptor()); }

 private:
  LazyFamily inner_;
  FinSet excluded_;
  Index base_ = 0;
};

class PermuteNode final : public FamilyNode {
 public:
  PermuteNode(LazyFamily inner, Permutation pi) : inner_(std::move(inner)), pi_(std::move(pi)), inv_(pi_.inverse()) {}
  bool contains(const FinSet& s) const override { return inner_.contains(inv_.image(s)); }
  TailProfile tail(const FinSet& s) const override {
    TailProfile t = inner_.tail(inv_.image(s));
    t.threshold = std::max({t.threshold, pi_.window(), past(s)});
    return t;
  }
  OrdinalW2 rank(const FinSet& s) const override { return inner_.node().rank(inv_.image(s)); }
  std::size_t size_bound(Index m) const override {
    return inner_.size_bound(std::max<Index>(m, pi_.window() == 0 ? 0 : pi_.window() - 1));
  }
  bool hereditary() const override { return inner_.hereditary(); }
  Index base() const override { return inner_.base(); }
  std::string descriptor() const override { return "permute " + to_string(pi_) + " " + wrap(inner_.descriptor()); }

 private:
  LazyFamily inner_;
  Permutation pi_;
  Permutation inv_;
};

class UnionNode final : public FamilyNode {
 public:
  UnionNode(LazyFamily a, LazyFamily b) : a_(std::move(a)), b_(std::move(b)) {}
  bool contains(const FinSet& s) const override { return a_.contains(s) || b_.contains(s); }
  TailProfile tail(const FinSet& s) const override {
    const TailProfile ta = a_.tail(s), tb = b_.tail(s);
    TailProfile out;
    out.threshold = std::max(ta.threshold, tb.threshold);
    const Index p = std::lcm(ta.period(), tb.period());
    out.classes.assign(p, TailClass::absent());
    for (Index k = 0; k < p; ++k) {
      const TailClass ca = ta.classes[k % ta.period()], cb = tb.classes[k % tb.period()];
      using K = TailClass::Kind;
      TailClass c;
      if (ca.kind == K::Absent) {
        c = cb;
      } else if (cb.kind == K::Absent) {
        c = ca;
      } else if (ca.kind == K::Constant && cb.kind == K::Constant) {
        c = TailClass::constant();
      } else if (ca.kind == K::Growing && cb.kind == K::Growing) {
        c = TailClass::growing(std::max(ca.limit, cb.limit));
      } else {
        // One side grows below ω·(q+1); the other is constant along the class.
        const bool a_grows = ca.kind == K::Growing;
        const TailClass& g = a_grows ? ca : cb;
        const LazyFamily& other = a_grows ? b_ : a_;
        const OrdinalW2 r = other.node().rank(s.with(out.representative(k)));
        c = r >= OrdinalW2::omega(g.limit + 1) ? TailClass::constant() : g;
      }
      out.classes[k] = c;
    }
    return out;
  }
  OrdinalW2 rank(const FinSet& s) const override {
    OrdinalW2 best = OrdinalW2::of(0);
    if (a_.contains(s)) best = std::max(best, a_.node().rank(s));
    if (b_.contains(s)) best = std::max(best, b_.node().rank(s));
    return best;
  }
  std::size_t size_bound(Index m) const override { return std::max(a_.size_bound(m), b_.size_bound(m)); }
  bool hereditary() const override { return a_.hereditary() && b_.hereditary(); }
  Index base() const override { return std::min(a_.base(), b_.base()); }
  std::string descriptor() const override { return "union " + wrap(a_.descriptor()) + " " + wrap(b_.descriptor()); }

 private:
  LazyFamily a_, b_;
};

class FiniteNode final : public FamilyNode {
 public:
  explicit FiniteNode(std::vector<FinSet> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const FinSet& s : members_) {
      horizon_ = std::max(horizon_, past(s));
      max_size_ = std::max(max_size_, s.size());
    }
    hereditary_ = std::all_of(members_.begin(), members_.end(), [&](const FinSet& s) {
      return std::all_of(s.begin(), s.end(), [&](Index i) { return contains(s.without(i)); });
    });
    base_ = 0;
    if (!members_.empty()) {
      Index lo = kMaxWindow;
      for (const FinSet& s : members_)
        if (!s.empty()) lo = std::min(lo, s.min());
      base_ = lo == kMaxWindow ? 0 : lo;
    }
  }
  bool contains(const FinSet& s) const override { return std::binary_search(members_.begin(), members_.end(), s); }
  TailProfile tail(const FinSet& s) const override {
    return TailProfile::uniform(std::max(horizon_, past(s)), TailClass::absent());
  }
  std::size_t size_bound(Index) const override { return max_size_; }
  bool hereditary() const override { return hereditary_; }
  Index base() const override { return base_; }
  std::string descriptor() const override {
    std::string d = "sets";
    for (const FinSet& s : members_) d += " " + to_string(s);
    return d;
  }

 private:
  std::vector<FinSet> members_;
  Index horizon_ = 0;
  std::size_t max_size_ = 0;
  bool hereditary_ = true;
  Index base_ = 0;
};

}  // namespace

LazyFamily schreier() { return LazyFamily(std::make_shared<SchreierNode>()); }

LazyFamily cube(std::uint32_t n) { return LazyFamily(std::make_shared<CubeNode>(n)); }

LazyFamily remove_sets(const LazyFamily& l, std::vector<FinSet> removed) {
  if (!l.hereditary()) throw PreconditionError("remove_sets needs a hereditary family");
  std::sort(removed.begin(), removed.end());
  for (const FinSet& r : removed) {
    if (!l.contains(r)) throw PreconditionError(to_string(r) + " is not a member of " + l.descriptor());
    // Surviving one-point extensions would break heredity.
    const ExtensionSet ext = l.extension_set(r);
    if (!ext.is_finite())
      throw PreconditionError("removing " + to_string(r) + " breaks heredity: it has infinitely many extensions");
    for (Index n : ext.exceptional())
      if (!std::binary_search(removed.begin(), removed.end(), r.with(n)))
        throw PreconditionError("removing " + to_string(r) + " breaks heredity: " + to_string(r.with(n)) +
                                " survives");
  }
  return LazyFamily(std::make_shared<RemoveSetsNode>(l, std::move(removed)));
}

LazyFamily restrict_ground(const LazyFamily& l, const FinSet& excluded) {
  return LazyFamily(std::make_shared<RestrictNode>(l, excluded));
}

LazyFamily union_of(const LazyFamily& a, const LazyFamily& b) { return LazyFamily(std::make_shared<UnionNode>(a, b)); }

LazyFamily finite_family(std::vector<FinSet> members) {
  return LazyFamily(std::make_shared<FiniteNode>(std::move(members)));
}

LazyFamily permuted(const LazyFamily& l, const Permutation& pi) {
  for (Index i = 0; i < std::min(l.base(), pi.window()); ++i)
    if (pi(i) != i) throw PreconditionError("permutation moves " + std::to_string(i) + ", below the family base");
  return LazyFamily(std::make_shared<PermuteNode>(l, pi));
}

LazyFamily remove_pattern_initial_pairs() { return LazyFamily(std::make_shared<InitialPairsNode>()); }

LazyFamily adjacent_pairs_removed() { return LazyFamily(std::make_shared<AdjacentRemovedNode>()); }

std::pair<LazyFamily, LazyFamily> homeo_not_pi_pair() {
  LazyFamily f = union_of(restrict_ground(cube(1), FinSet{0}), restrict_ground(cube(2), FinSet{0, 1}));
  LazyFamily g = restrict_ground(cube(2), FinSet{0});
  return {f, g};
}

std::pair<LazyFamily, LazyFamily> permuted_pair_example() {
  return {remove_sets(cube(2), {FinSet{2, 3}}), remove_sets(cube(2), {FinSet{1, 2}})};
}

Permutation permuted_pair_permutation() {
  const std::pair<Index, Index> pairs[] = {{1, 3}, {2, 1}, {3, 2}};
  return Permutation::from_pairs(pairs);
}

Index encode_block_index(BlockIndex b, std::uint32_t blocks) {
  if (blocks == 0 || b.block >= blocks) throw PreconditionError("block index out of range");
  return b.block + blocks * b.offset;
}

BlockIndex decode_block_index(Index i, std::uint32_t blocks) {
  if (blocks == 0) throw PreconditionError("block count must be positive");
  return {i % blocks, i / blocks};
}

FinSet encode_block_set(const std::vector<BlockIndex>& elems, std::uint32_t blocks) {
  std::vector<Index> out;
  out.reserve(elems.size());
  for (const BlockIndex& b : elems) out.push_back(encode_block_index(b, blocks));
  return FinSet::from_unsorted(std::move(out));
}

LazyFamily block_schreier(std::uint32_t blocks) {
  if (blocks == 0) throw PreconditionError("block_schreier needs m >= 1");
  return LazyFamily(std::make_shared<BlockSchreierNode>(blocks));
}

std::vector<std::string> catalog_names() {
  return {"ex-4-perm-pair.F", "ex-4-perm-pair.G", "ex-homeo-not-pi.F", "ex-homeo-not-pi.G",
          "ex-adjacent-removed", "ex-initial-pairs", "ex-permuted-schreier"};
}

std::optional<LazyFamily> catalog_family(const std::string& name) {
  if (name == "ex-4-perm-pair.F") return permuted_pair_example().first;
  if (name == "ex-4-perm-pair.G") return permuted_pair_example().second;
  if (name == "ex-homeo-not-pi.F") return homeo_not_pi_pair().first;
  if (name == "ex-homeo-not-pi.G") return homeo_not_pi_pair().second;
  if (name == "ex-adjacent-removed") return adjacent_pairs_removed();
  if (name == "ex-initial-pairs") return remove_pattern_initial_pairs();
  if (name == "ex-permuted-schreier") {
    const std::pair<Index, Index> swap[] = {{0, 1}, {1, 0}};
    return permuted(schreier(), Permutation::from_pairs(swap));
  }
  return std::nullopt;
}

FiniteTree::FiniteTree(std::vector<std::optional<Index>> parent) : parent_(std::move(parent)) {
  const Index n = size();
  heights_.assign(n, 0);
  // 0 = unvisited, 1 = on the current path, 2 = done
  std::vector<std::uint8_t> state(n, 0);
  std::function<Index(Index)> depth = [&](Index f) -> Index {
    if (state[f] == 2) return heights_[f];
    if (state[f] == 1) throw PreconditionError("tree parent map has a cycle through node " + std::to_string(f));
    state[f] = 1;
    Index h = 0;
    if (parent_[f]) {
      if (*parent_[f] >= n) throw PreconditionError("tree parent out of range at node " + std::to_string(f));
      h = depth(*parent_[f]) + 1;
    }
    heights_[f] = h;
    state[f] = 2;
    return h;
  };
  for (Index f = 0; f < n; ++f) depth(f);
}

FiniteTree FiniteTree::chain(Index length) {
  std::vector<std::optional<Index>> p(length);
  for (Index f = 1; f < length; ++f) p[f] = f - 1;
  return FiniteTree(std::move(p));
}

FiniteTree FiniteTree::antichain(Index count) { return FiniteTree(std::vector<std::optional<Index>>(count)); }

FiniteTree FiniteTree::complete_binary(Index levels) {
  if (levels > 20) throw PreconditionError("binary tree too deep");
  const Index n = levels == 0 ? 0 : (Index{1} << levels) - 1;
  std::vector<std::optional<Index>> p(n);
  for (Index f = 1; f < n; ++f) p[f] = (f - 1) / 2;
  return FiniteTree(std::move(p));
}

Index FiniteTree::height() const noexcept {
  Index h = 0;
  for (Index x : heights_) h = std::max(h, x + 1);
  return h;
}

bool FiniteTree::comparable(Index f, Index g) const {
  if (heights_.at(f) < heights_.at(g)) std::swap(f, g);
  while (heights_[f] > heights_[g]) f = *parent_[f];
  return f == g;
}

bool FiniteTree::is_chain(const FinSet& nodes) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!comparable(nodes[i], nodes[j])) return false;
  return true;
}

ExplicitFamily tree_lift(const FiniteTree& tree, const ExplicitFamily& heights) {
  if (!is_hereditary(heights)) throw PreconditionError("tree_lift needs a hereditary height family");
  if (heights.window() < tree.height()) throw PreconditionError("height family window is below the tree height");
  if (tree.size() > kMaxWindow) throw PreconditionError("tree has more than 64 nodes");
  // Extend chains upward one node at a time; heights along a chain increase.
  std::vector<std::uint64_t> masks;
  std::vector<Index> chain;
  auto rec = [&](auto&& self, std::uint64_t node_mask, std::uint64_t height_mask) -> void {
    masks.push_back(node_mask);
    for (Index g = 0; g < tree.size(); ++g) {
      if (node_mask >> g & 1) continue;
      if (!chain.empty() && (tree.height(g) <= tree.height(chain.back()) || !tree.comparable(g, chain.back())))
        continue;
      const std::uint64_t h = height_mask | std::uint64_t{1} << tree.height(g);
      if (!heights.contains_mask(h)) continue;
      chain.push_back(g);
      self(self, node_mask | std::uint64_t{1} << g, h);
      chain.pop_back();
    }
  };
  if (heights.contains_mask(0)) rec(rec, 0, 0);
  return ExplicitFamily::from_masks(0, tree.size(), std::move(masks));
}

}  // namespace combfam
