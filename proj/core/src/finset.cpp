#include "combfam/finset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>

#include "combfam/error.hpp"

namespace combfam {

FinSet::FinSet(std::initializer_list<Index> elems) : elems_(elems) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FinSet FinSet::from_unsorted(std::vector<Index> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FinSet out;
  out.elems_ = std::move(elems);
  return out;
}

FinSet FinSet::from_mask(std::uint64_t mask) {
  FinSet out;
  out.elems_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.elems_.push_back(static_cast<Index>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

FinSet FinSet::interval(Index lo, Index hi) {
  FinSet out;
  for (Index i = lo; i < hi; ++i) out.elems_.push_back(i);
  return out;
}

bool FinSet::contains(Index i) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

bool FinSet::is_subset_of(const FinSet& other) const noexcept {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FinSet FinSet::with(Index i) const {
  FinSet out = *this;
  auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), i);
  if (it == out.elems_.end() || *it != i) out.elems_.insert(it, i);
  return out;
}

FinSet FinSet::without(Index i) const {
  FinSet out = *this;
  auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), i);
  if (it != out.elems_.end() && *it == i) out.elems_.erase(it);
  return out;
}

std::uint64_t FinSet::mask() const {
  if (!fits_mask()) throw PreconditionError("set " + to_string(*this) + " does not fit a 64-bit window");
  std::uint64_t m = 0;
  for (Index i : elems_) m |= std::uint64_t{1} << i;
  return m;
}

std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                b.elems_.end());
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet::from_unsorted(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet::from_unsorted(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet::from_unsorted(std::move(out));
}

std::string to_string(const FinSet& s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s) {
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const FinSet& s) { return os << to_string(s); }

FinSet parse_finset(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "-") return {};
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unterminated set literal '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Index> elems;
  while (!text.empty()) {
    std::size_t end = text.find_first_of(" \t,");
    std::string_view tok = text.substr(0, end);
    Index value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("bad set element '" + std::string(tok) + "'");
    elems.push_back(value);
    text = end == std::string_view::npos ? std::string_view{} : trim(text.substr(end + 1));
  }
  return FinSet::from_unsorted(std::move(elems));
}

bool mask_less(std::uint64_t a, std::uint64_t b) noexcept {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  // For equal-size sets the lowest differing element decides the
  // lexicographic comparison: whichever set holds it is smaller.
  return (a & (diff & -diff)) != 0;
}

}  // namespace combfam
