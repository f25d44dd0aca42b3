#include "combfam/norm.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "combfam/error.hpp"

namespace combfam {

SparseVector SparseVector::dense(std::span<const Rational> values) {
  SparseVector x;
  for (std::size_t i = 0; i < values.size(); ++i) x.set(static_cast<Index>(i), values[i]);
  return x;
}

SparseVector SparseVector::indicator(const FinSet& s, const Rational& value) {
  SparseVector x;
  for (Index i : s) x.set(i, value);
  return x;
}

Rational SparseVector::get(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::set(Index i, const Rational& v) {
  if (v == 0)
    entries_.erase(i);
  else
    entries_[i] = v;
}

FinSet SparseVector::support() const {
  std::vector<Index> s;
  s.reserve(entries_.size());
  for (const auto& [i, v] : entries_) s.push_back(i);
  return FinSet::from_unsorted(std::move(s));
}

SignedFunctional::SignedFunctional(FinSet s, std::vector<std::int8_t> sg) : support(std::move(s)), signs(std::move(sg)) {
  if (signs.size() != support.size()) throw PreconditionError("one sign per support point is required");
  for (auto v : signs)
    if (v != 1 && v != -1) throw PreconditionError("signs must be +1 or -1");
}

SignedFunctional SignedFunctional::positive(const FinSet& s) {
  return SignedFunctional(s, std::vector<std::int8_t>(s.size(), 1));
}

std::int8_t SignedFunctional::sign_at(Index alpha) const {
  auto it = std::lower_bound(support.begin(), support.end(), alpha);
  if (it == support.end() || *it != alpha) return 0;
  return signs[static_cast<std::size_t>(it - support.begin())];
}

std::string to_string(const SignedFunctional& f) {
  if (f.support.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    if (i) out += ' ';
    out += f.signs[i] > 0 ? '+' : '-';
    out += std::to_string(f.support[i]);
  }
  return out;
}

Rational norm(const ExplicitFamily& f, const SparseVector& x) {
  // Members are bitmasks; entries beyond the window never meet a member.
  std::vector<std::pair<std::uint64_t, Rational>> weights;
  for (const auto& [i, v] : x.entries())
    if (i < f.window()) weights.emplace_back(std::uint64_t{1} << i, abs(v));
  Rational best = 0;
  for (std::uint64_t m : f.masks()) {
    Rational sum = 0;
    for (const auto& [bit, w] : weights)
      if (m & bit) sum += w;
    if (sum > best) best = sum;
  }
  return best;
}

Rational norm(const LazyFamily& l, const SparseVector& x) {
  if (!l.hereditary()) throw PreconditionError("lazy norm needs a hereditary family");
  if (!l.contains(FinSet{})) return 0;
  std::vector<std::pair<Index, Rational>> entries;
  for (const auto& [i, v] : x.entries()) entries.emplace_back(i, abs(v));
  Rational best = 0;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, std::size_t from, const Rational& sum) -> void {
    if (sum > best) best = sum;
    for (std::size_t j = from; j < entries.size(); ++j) {
      cur.push_back(entries[j].first);
      if (l.contains(FinSet::from_unsorted(cur))) self(self, j + 1, sum + entries[j].second);
      cur.pop_back();
    }
  };
  rec(rec, 0, Rational(0));
  return best;
}

Rational functional_apply(const SignedFunctional& f, const SparseVector& x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    const Rational v = x.get(f.support[i]);
    if (f.signs[i] > 0)
      sum += v;
    else
      sum -= v;
  }
  return sum;
}

namespace {

void append_sign_patterns(const FinSet& s, std::vector<SignedFunctional>& out) {
  const std::size_t k = s.size();
  if (k > 20) throw PreconditionError("member too large to enumerate sign patterns");
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k); ++pattern) {
    std::vector<std::int8_t> signs(k);
    // Bit i of the pattern flips the sign of the i-th element; + comes first.
    for (std::size_t i = 0; i < k; ++i) signs[i] = (pattern >> (k - 1 - i) & 1) ? -1 : 1;
    out.emplace_back(s, std::move(signs));
  }
}

std::vector<Rational> coordinates(const SignedFunctional& f, Index window) {
  std::vector<Rational> v(window, 0);
  for (std::size_t i = 0; i < f.support.size(); ++i) v[f.support[i]] = f.signs[i];
  return v;
}

}  // namespace

std::vector<SignedFunctional> extreme_points(const ExplicitFamily& f) {
  if (!is_hereditary(f)) throw PreconditionError("extreme_points needs a hereditary family");
  std::vector<SignedFunctional> out;
  const ExplicitFamily maxi = maximal_elements(f);
  for (std::size_t i = 0; i < maxi.size(); ++i) append_sign_patterns(maxi.member(i), out);
  return out;
}

std::vector<SignedFunctional> candidate_functionals(const ExplicitFamily& f) {
  std::vector<SignedFunctional> out;
  for (std::size_t i = 0; i < f.size(); ++i) append_sign_patterns(f.member(i), out);
  return out;
}

std::optional<std::vector<Rational>> convex_combination(const std::vector<std::vector<Rational>>& points,
                                                        const std::vector<Rational>& target) {
  const std::size_t d = target.size();
  const std::size_t n = points.size();
  const std::size_t m = d + 1;
  for (const auto& p : points)
    if (p.size() != d) throw PreconditionError("convex_combination: dimension mismatch");
  if (n == 0) return std::nullopt;

  // Phase-1 tableau: rows are the d coordinates plus Σλ = 1; one artificial
  // per row; the last row holds the reduced costs of Σ artificials.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, 0));
  for (std::size_t r = 0; r < m; ++r) {
    const Rational rhs = r < d ? target[r] : Rational(1);
    // Rows with a negative right-hand side are negated so artificials start feasible.
    const int flip = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[r][j] = flip * (r < d ? points[j][r] : Rational(1));
    t[r][cols - 1] = flip * rhs;
    t[r][n + r] = 1;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (j >= n && j < n + m) continue;
    Rational sum = 0;
    for (std::size_t r = 0; r < m; ++r) sum += t[r][j];
    t[m][j] = -sum;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  for (;;) {
    // Bland's rule: lowest-index improving column, lowest-index leaving basis variable.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase 1
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (t[m][cols - 1] != 0) return std::nullopt;
  std::vector<Rational> lambda(n, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) lambda[basis[r]] = t[r][cols - 1];
  return lambda;
}

bool is_extreme_brute(const ExplicitFamily& f, const SignedFunctional& g) {
  if (!f.contains(g.support)) throw PreconditionError("functional support " + to_string(g.support) + " is not a member");
  const Index w = f.window();
  std::vector<std::vector<Rational>> others;
  for (const SignedFunctional& c : candidate_functionals(f))
    if (!(c == g)) others.push_back(coordinates(c, w));
  return !convex_combination(others, coordinates(g, w)).has_value();
}

bool norming_check(const ExplicitFamily& f, std::span<const SparseVector> sample) {
  const std::vector<SignedFunctional> ext = extreme_points(f);
  for (const SparseVector& x : sample) {
    Rational best = 0;
    for (const SignedFunctional& e : ext) {
      Rational v = abs(functional_apply(e, x));
      if (v > best) best = v;
    }
    if (best != norm(f, x)) return false;
  }
  return true;
}

SparseVector apply_operator(const SignedPermutationOperator& t, const SparseVector& x) {
  SparseVector y;
  for (const auto& [i, v] : x.entries()) y.set(t.pi(i), t.negated.contains(i) ? Rational(-v) : v);
  return y;
}

IsometryResult is_isometry(const SignedPermutationOperator& t, const ExplicitFamily& f, const ExplicitFamily& g) {
  if (f.window() != g.window() || f.base() != g.base())
    throw PreconditionError("is_isometry needs families on the same window");
  if (t.pi.window() > f.window()) throw PreconditionError("permutation exceeds the family window");
  if (!is_hereditary(f) || !is_hereditary(g)) throw PreconditionError("is_isometry needs hereditary families");
  const ExplicitFamily image = apply_permutation(f, t.pi);
  IsometryResult r;
  if (image == g) {
    r.isometry = true;
    return r;
  }
  // Canonically least set in the symmetric difference.
  std::optional<std::uint64_t> best;
  for (const auto* pair : {&image, &g}) {
    const ExplicitFamily& a = *pair;
    const ExplicitFamily& b = pair == &image ? g : image;
    for (std::uint64_t m : a.masks())
      if (!b.contains_mask(m) && (!best || mask_less(m, *best))) best = m;
  }
  r.witness = FinSet::from_mask(*best);
  const SparseVector y = SparseVector::indicator(*r.witness);
  const SignedPermutationOperator inv{t.pi.inverse(), FinSet{}};
  r.norm_g = norm(g, y);
  r.norm_f = norm(f, apply_operator(inv, y));
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const bool ok = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '/' || c == '-';
  });
  Rational q;
  if (!ok || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string format_vector(const SparseVector& x) {
  std::string out = "vec\n";
  for (const auto& [i, v] : x.entries()) out += std::to_string(i) + " " + v.get_str() + "\n";
  return out;
}

SparseVector parse_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  SparseVector x;
  std::optional<Index> prev;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!header) {
      std::string word, extra;
      ls >> word;
      if (word != "vec" || (ls >> extra)) throw ParseError("expected header 'vec'", lineno);
      header = true;
      continue;
    }
    std::string idx, val, extra;
    if (!(ls >> idx >> val) || (ls >> extra)) throw ParseError("expected 'index value'", lineno);
    Index i = 0;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(idx, &used);
      if (used != idx.size() || idx.front() == '-' || v > 0xffffffffUL) throw std::out_of_range("");
      i = static_cast<Index>(v);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + idx + "'", lineno);
    }
    if (prev && i <= *prev) throw ParseError("indices must be strictly increasing", lineno);
    prev = i;
    try {
      x.set(i, parse_rational(val));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!header) throw ParseError("missing 'vec' header", lineno == 0 ? 1 : lineno);
  return x;
}

}  // namespace combfam
