#include "combfam/family.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "combfam/error.hpp"

namespace combfam {

namespace {

std::uint64_t window_mask(Index base, Index window) {
  if (window <= base) return 0;
  std::uint64_t upper = window >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << window) - 1;
  std::uint64_t lower = (std::uint64_t{1} << base) - 1;
  return upper & ~lower;
}

void check_window(Index base, Index window) {
  if (window > kMaxWindow)
    throw PreconditionError("window " + std::to_string(window) + " exceeds the supported maximum " +
                            std::to_string(kMaxWindow));
  if (base > window) throw PreconditionError("base exceeds window");
}

}  // namespace

ExplicitFamily ExplicitFamily::from_masks(Index base, Index window, std::vector<std::uint64_t> masks) {
  check_window(base, window);
  const std::uint64_t ground = window_mask(base, window);
  for (std::uint64_t m : masks) {
    if ((m & ~ground) != 0)
      throw PreconditionError("member " + to_string(FinSet::from_mask(m)) + " lies outside [" +
                              std::to_string(base) + ", " + std::to_string(window) + ")");
  }
  ExplicitFamily f;
  f.base_ = base;
  f.window_ = window;
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  f.sorted_ = masks;
  std::sort(masks.begin(), masks.end(), mask_less);
  f.masks_ = std::move(masks);
  return f;
}

ExplicitFamily::ExplicitFamily(Index base, Index window, std::span<const FinSet> members) {
  check_window(base, window);
  std::vector<std::uint64_t> masks;
  masks.reserve(members.size());
  for (const FinSet& s : members) {
    if (!s.fits_mask() || (!s.empty() && (s.min() < base || s.max() >= window)))
      throw PreconditionError("member " + to_string(s) + " lies outside [" + std::to_string(base) + ", " +
                              std::to_string(window) + ")");
    masks.push_back(s.mask());
  }
  *this = from_masks(base, window, std::move(masks));
}

ExplicitFamily::ExplicitFamily(Index base, Index window, std::initializer_list<FinSet> members)
    : ExplicitFamily(base, window, std::span<const FinSet>(members.begin(), members.size())) {}

std::vector<FinSet> ExplicitFamily::members() const {
  std::vector<FinSet> out;
  out.reserve(masks_.size());
  for (std::uint64_t m : masks_) out.push_back(FinSet::from_mask(m));
  return out;
}

bool ExplicitFamily::contains(const FinSet& s) const {
  if (!s.fits_mask()) return false;
  return contains_mask(s.mask());
}

bool ExplicitFamily::contains_mask(std::uint64_t m) const noexcept {
  return std::binary_search(sorted_.begin(), sorted_.end(), m);
}

std::uint64_t ExplicitFamily::support_mask() const noexcept {
  std::uint64_t u = 0;
  for (std::uint64_t m : masks_) u |= m;
  return u;
}

std::uint64_t ExplicitFamily::ground_mask() const noexcept { return window_mask(base_, window_); }

std::size_t ExplicitFamily::max_member_size() const noexcept {
  return masks_.empty() ? 0 : static_cast<std::size_t>(std::popcount(masks_.back()));
}

ExplicitFamily ExplicitFamily::rewindowed(Index window) const {
  return from_masks(base_, window, sorted_);
}

bool operator<(const ExplicitFamily& a, const ExplicitFamily& b) {
  if (a.window_ != b.window_) return a.window_ < b.window_;
  if (a.base_ != b.base_) return a.base_ < b.base_;
  if (a.masks_.size() != b.masks_.size()) return a.masks_.size() < b.masks_.size();
  return std::lexicographical_compare(a.masks_.begin(), a.masks_.end(), b.masks_.begin(), b.masks_.end(),
                                      mask_less);
}

// --- Permutation ----------------------------------------------------------

Permutation::Permutation(std::vector<Index> table) : table_(std::move(table)) {
  std::vector<bool> seen(table_.size(), false);
  for (Index v : table_) {
    if (v >= table_.size() || seen[v]) throw PreconditionError("permutation table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(Index window) {
  std::vector<Index> t(window);
  for (Index i = 0; i < window; ++i) t[i] = i;
  Permutation p;
  p.table_ = std::move(t);
  return p;
}

Permutation Permutation::from_pairs(std::span<const std::pair<Index, Index>> pairs) {
  Index window = 0;
  for (auto [from, to] : pairs) window = std::max({window, from + 1, to + 1});
  std::vector<Index> table(window);
  std::vector<bool> assigned(window, false);
  for (Index i = 0; i < window; ++i) table[i] = i;
  for (auto [from, to] : pairs) {
    if (assigned[from]) throw PreconditionError("point " + std::to_string(from) + " mapped twice");
    assigned[from] = true;
    table[from] = to;
  }
  return Permutation(std::move(table));
}

FinSet Permutation::image(const FinSet& s) const {
  std::vector<Index> out;
  out.reserve(s.size());
  for (Index i : s) out.push_back((*this)(i));
  return FinSet::from_unsorted(std::move(out));
}

std::uint64_t Permutation::image_mask(std::uint64_t m) const {
  std::uint64_t out = 0;
  while (m != 0) {
    Index i = static_cast<Index>(std::countr_zero(m));
    m &= m - 1;
    Index j = (*this)(i);
    if (j >= 64) throw PreconditionError("permutation image leaves the 64-bit window");
    out |= std::uint64_t{1} << j;
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(table_.size());
  for (Index i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
  Permutation p;
  p.table_ = std::move(inv);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Index w = std::max(window(), other.window());
  std::vector<Index> t(w);
  for (Index i = 0; i < w; ++i) t[i] = (*this)(other(i));
  Permutation p;
  p.table_ = std::move(t);
  return p;
}

Permutation Permutation::extended(Index window) const {
  if (window <= this->window()) return *this;
  Permutation p = *this;
  for (Index i = this->window(); i < window; ++i) p.table_.push_back(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (Index i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

std::vector<Index> Permutation::moved_points() const {
  std::vector<Index> out;
  for (Index i = 0; i < table_.size(); ++i)
    if (table_[i] != i) out.push_back(i);
  return out;
}

bool operator==(const Permutation& a, const Permutation& b) {
  Index w = std::max(a.window(), b.window());
  for (Index i = 0; i < w; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool operator<(const Permutation& a, const Permutation& b) {
  Index w = std::max(a.window(), b.window());
  for (Index i = 0; i < w; ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  bool first = true;
  for (Index i : p.moved_points()) {
    if (!first) out += ' ';
    out += std::to_string(i) + '>' + std::to_string(p(i));
    first = false;
  }
  return out + ']';
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("permutation must look like [a>b c>d]: '" + std::string(text) + "'");
  std::istringstream in{std::string(text.substr(1, text.size() - 2))};
  std::vector<std::pair<Index, Index>> pairs;
  std::string tok;
  while (in >> tok) {
    auto gt = tok.find('>');
    if (gt == std::string::npos) throw ParseError("bad permutation entry '" + tok + "'");
    Index from = 0, to = 0;
    auto r1 = std::from_chars(tok.data(), tok.data() + gt, from);
    auto r2 = std::from_chars(tok.data() + gt + 1, tok.data() + tok.size(), to);
    if (r1.ec != std::errc{} || r1.ptr != tok.data() + gt || r2.ec != std::errc{} ||
        r2.ptr != tok.data() + tok.size())
      throw ParseError("bad permutation entry '" + tok + "'");
    pairs.emplace_back(from, to);
  }
  try {
    return Permutation::from_pairs(pairs);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

// --- family operations ----------------------------------------------------

bool contains(const ExplicitFamily& f, const FinSet& s) { return f.contains(s); }

bool is_hereditary(const ExplicitFamily& f) {
  for (std::uint64_t m : f.masks()) {
    std::uint64_t rest = m;
    while (rest != 0) {
      std::uint64_t bit = rest & -rest;
      rest &= rest - 1;
      if (!f.contains_mask(m & ~bit)) return false;
    }
  }
  return true;
}

ExplicitFamily downward_closure(const ExplicitFamily& f) {
  std::unordered_set<std::uint64_t> seen(f.masks().begin(), f.masks().end());
  std::vector<std::uint64_t> stack(f.masks().begin(), f.masks().end());
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    std::uint64_t rest = m;
    while (rest != 0) {
      std::uint64_t bit = rest & -rest;
      rest &= rest - 1;
      if (seen.insert(m & ~bit).second) stack.push_back(m & ~bit);
    }
  }
  return ExplicitFamily::from_masks(f.base(), f.window(), {seen.begin(), seen.end()});
}

ExplicitFamily maximal_elements(const ExplicitFamily& f) {
  std::vector<std::uint64_t> out;
  auto masks = f.masks();
  if (is_hereditary(f)) {
    // A member of a hereditary family is maximal iff no one-point extension is a member.
    const std::uint64_t ground = f.ground_mask();
    for (std::uint64_t m : masks) {
      bool maximal = true;
      std::uint64_t free = ground & ~m;
      while (free != 0 && maximal) {
        std::uint64_t bit = free & -free;
        free &= free - 1;
        if (f.contains_mask(m | bit)) maximal = false;
      }
      if (maximal) out.push_back(m);
    }
  } else {
    // Canonical order is by size, so only later members can be proper supersets.
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = masks.size(); j-- > i + 1 && maximal;) {
        if (std::popcount(masks[j]) <= std::popcount(masks[i])) break;
        if ((masks[i] & ~masks[j]) == 0) maximal = false;
      }
      if (maximal) out.push_back(masks[i]);
    }
  }
  return ExplicitFamily::from_masks(f.base(), f.window(), std::move(out));
}

ExplicitFamily apply_permutation(const ExplicitFamily& f, const Permutation& pi) {
  const Permutation p = pi.extended(f.window());
  for (Index i = 0; i < f.window(); ++i) {
    if (p(i) >= f.window())
      throw PreconditionError("permutation " + to_string(pi) + " maps " + std::to_string(i) +
                              " outside the window " + std::to_string(f.window()));
    if (i < f.base() && p(i) != i)
      throw PreconditionError("permutation " + to_string(pi) + " moves a point below the base");
  }
  std::vector<std::uint64_t> out;
  out.reserve(f.size());
  for (std::uint64_t m : f.masks()) out.push_back(p.image_mask(m));
  return ExplicitFamily::from_masks(f.base(), f.window(), std::move(out));
}

ExplicitFamily trace(const ExplicitFamily& f, const FinSet& a) {
  std::uint64_t am = 0;
  for (Index i : a)
    if (i < 64) am |= std::uint64_t{1} << i;
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : f.masks())
    if ((m & ~am) == 0) out.push_back(m);
  return ExplicitFamily::from_masks(f.base(), f.window(), std::move(out));
}

ExplicitFamily level(const ExplicitFamily& f, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : f.masks())
    if (static_cast<std::size_t>(std::popcount(m)) == n) out.push_back(m);
  return ExplicitFamily::from_masks(f.base(), f.window(), std::move(out));
}

bool has_all_singletons(const ExplicitFamily& f, Index bound) {
  for (Index i = f.base(); i < bound; ++i)
    if (i >= 64 || !f.contains_mask(std::uint64_t{1} << i)) return false;
  return true;
}

// --- text format ----------------------------------------------------------

std::string format_family(const ExplicitFamily& f) {
  std::ostringstream os;
  write_family(os, f);
  return os.str();
}

void write_family(std::ostream& os, const ExplicitFamily& f) {
  os << "ground " << f.base() << ' ' << f.window() << '\n';
  for (std::uint64_t m : f.masks()) {
    if (m == 0) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (Index i : FinSet::from_mask(m)) {
      if (!first) os << ' ';
      os << i;
      first = false;
    }
    os << '\n';
  }
}

ExplicitFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_family(in);
}

ExplicitFamily read_family(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  Index base = 0, window = 0;
  std::vector<std::uint64_t> masks;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view v = line;
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    if (v.empty() || v.front() == '#') continue;
    if (!have_header) {
      std::istringstream hs{std::string(v)};
      std::string kw;
      long long b = -1, w = -1;
      std::string extra;
      if (!(hs >> kw >> b >> w) || kw != "ground" || (hs >> extra) || b < 0 || w < 0)
        throw ParseError("expected header 'ground <base> <window>'", lineno);
      if (w > kMaxWindow) throw ParseError("window exceeds " + std::to_string(kMaxWindow), lineno);
      if (b > w) throw ParseError("base exceeds window", lineno);
      base = static_cast<Index>(b);
      window = static_cast<Index>(w);
      have_header = true;
      continue;
    }
    if (v == "-") {
      masks.push_back(0);
      continue;
    }
    std::uint64_t m = 0;
    long long prev = -1;
    std::istringstream ms{std::string(v)};
    std::string tok;
    while (ms >> tok) {
      long long x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad element '" + tok + "'", lineno);
      if (x <= prev) throw ParseError("member elements must be strictly increasing", lineno);
      if (x < base || x >= window)
        throw ParseError("element " + tok + " outside [" + std::to_string(base) + ", " + std::to_string(window) + ")",
                         lineno);
      m |= std::uint64_t{1} << x;
      prev = x;
    }
    masks.push_back(m);
  }
  if (!have_header) throw ParseError("missing 'ground' header", lineno == 0 ? 1 : lineno);
  return ExplicitFamily::from_masks(base, window, std::move(masks));
}

}  // namespace combfam
