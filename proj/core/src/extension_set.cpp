#include "combfam/extension_set.hpp"

#include <algorithm>

#include "combfam/error.hpp"

namespace combfam {

ExtensionSet ExtensionSet::finite(FinSet points) {
  ExtensionSet e;
  e.exceptional_ = std::move(points);
  return e;
}

ExtensionSet ExtensionSet::eventually_periodic(FinSet exceptional, Index threshold, std::vector<bool> residues) {
  if (residues.empty()) throw PreconditionError("period must be positive");
  ExtensionSet e;
  e.exceptional_ = std::move(exceptional);
  e.tail_ = Tail{threshold, std::move(residues)};
  e.normalize();
  return e;
}

ExtensionSet ExtensionSet::cofinite(FinSet exceptional, Index threshold) {
  return eventually_periodic(std::move(exceptional), threshold, {true});
}

void ExtensionSet::normalize() {
  if (!tail_) return;
  Tail& t = *tail_;
  if (std::none_of(t.residues.begin(), t.residues.end(), [](bool b) { return b; })) {
    tail_.reset();
    return;
  }
  const auto period = static_cast<Index>(t.residues.size());
  // Exceptional points at or above the threshold: move the threshold past them.
  if (!exceptional_.empty() && exceptional_.max() >= t.threshold) {
    Index raised = exceptional_.max() + 1;
    std::vector<Index> pts(exceptional_.begin(), exceptional_.end());
    for (Index n = t.threshold; n < raised; ++n)
      if (t.residues[n % period]) pts.push_back(n);
    exceptional_ = FinSet::from_unsorted(std::move(pts));
    t.threshold = raised;
  }
  // Minimal period.
  for (Index d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (Index k = d; k < period && ok; ++k) ok = t.residues[k] == t.residues[k % d];
    if (ok) {
      // Re-anchor residues: residue classes are absolute (n mod period).
      t.residues.resize(d);
      break;
    }
  }
  const auto p = static_cast<Index>(t.residues.size());
  // Minimal threshold.
  while (t.threshold > 0) {
    Index x = t.threshold - 1;
    bool in_pattern = t.residues[x % p];
    if (in_pattern != exceptional_.contains(x)) break;
    exceptional_ = exceptional_.without(x);
    t.threshold = x;
  }
}

bool ExtensionSet::contains(Index n) const {
  if (tail_ && n >= tail_->threshold) return tail_->residues[n % tail_->residues.size()];
  return exceptional_.contains(n);
}

std::optional<std::size_t> ExtensionSet::cardinality() const {
  if (tail_) return std::nullopt;
  return exceptional_.size();
}

std::optional<Index> ExtensionSet::tail_threshold() const {
  if (!tail_) return std::nullopt;
  return tail_->threshold;
}

Index ExtensionSet::period() const { return tail_ ? static_cast<Index>(tail_->residues.size()) : 1; }

std::vector<bool> ExtensionSet::residues() const { return tail_ ? tail_->residues : std::vector<bool>{false}; }

FinSet ExtensionSet::elements_below(Index bound) const {
  std::vector<Index> out;
  for (Index n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return FinSet::from_unsorted(std::move(out));
}

ExtensionSet ExtensionSet::complement() const {
  if (!tail_) {
    Index t = exceptional_.empty() ? 0 : exceptional_.max() + 1;
    return cofinite(set_difference(FinSet::interval(0, t), exceptional_), t);
  }
  std::vector<bool> flipped = tail_->residues;
  for (std::size_t i = 0; i < flipped.size(); ++i) flipped[i] = !flipped[i];
  return eventually_periodic(set_difference(FinSet::interval(0, tail_->threshold), exceptional_),
                             tail_->threshold, std::move(flipped));
}

ExtensionSet ExtensionSet::minus(const FinSet& points) const {
  if (!tail_) return finite(set_difference(exceptional_, points));
  Index t = tail_->threshold;
  if (!points.empty()) t = std::max(t, points.max() + 1);
  return eventually_periodic(set_difference(elements_below(t), points), t, tail_->residues);
}

std::string to_string(const ExtensionSet& e) {
  if (e.is_finite()) return to_string(e.exceptional());
  std::string out;
  if (!e.exceptional().empty()) out += to_string(e.exceptional()) + " + ";
  out += "[" + std::to_string(*e.tail_threshold()) + "..)";
  if (e.period() > 1) {
    std::vector<Index> res;
    auto r = e.residues();
    for (Index k = 0; k < r.size(); ++k)
      if (r[k]) res.push_back(k);
    out += " mod " + std::to_string(e.period()) + " " + to_string(FinSet::from_unsorted(res));
  }
  return out;
}

}  // namespace combfam
