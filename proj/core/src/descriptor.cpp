#include "combfam/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "combfam/constructions.hpp"
#include "combfam/error.hpp"

namespace combfam {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  LazyFamily parse() {
    LazyFamily l = expr();
    if (pos_ != toks_.size()) fail("unexpected '" + toks_[pos_] + "'");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("descriptor: " + msg + " in '" + std::string(text_) + "'");
  }

  void tokenize() {
    std::size_t i = 0;
    auto bracketed = [&](char close) {
      const std::size_t end = text_.find(close, i);
      if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
      toks_.emplace_back(text_.substr(i, end + 1 - i));
      i = end + 1;
    };
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        toks_.emplace_back(1, c);
        ++i;
      } else if (c == '{') {
        bracketed('}');
      } else if (c == '!' && i + 1 < text_.size() && text_[i + 1] == '{') {
        bracketed('}');
      } else if (c == '[') {
        bracketed(']');
      } else {
        std::size_t j = i;
        while (j < text_.size() && !std::isspace(static_cast<unsigned char>(text_[j])) && text_[j] != '(' &&
               text_[j] != ')' && text_[j] != '{' && text_[j] != '[')
          ++j;
        toks_.emplace_back(text_.substr(i, j - i));
        i = j;
      }
    }
  }

  bool at_end() const { return pos_ >= toks_.size(); }
  const std::string& peek() const { return toks_[pos_]; }
  std::string next() {
    if (at_end()) fail("unexpected end");
    return toks_[pos_++];
  }
  bool peek_set() const { return !at_end() && (peek().front() == '{' || peek() == "-"); }

  std::uint32_t number() {
    const std::string t = next();
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) fail("expected a number, got '" + t + "'");
    return v;
  }

  FinSet set() {
    const std::string t = next();
    try {
      return parse_finset(t);
    } catch (const ParseError&) {
      fail("bad set '" + t + "'");
    }
  }

  LazyFamily expr() {
    const std::string t = next();
    if (t == "(") {
      LazyFamily l = expr();
      if (next() != ")") fail("expected ')'");
      return l;
    }
    if (t == "schreier") return schreier();
    if (t == "cube") return cube(number());
    if (t == "block-schreier") {
      const std::uint32_t m = number();
      if (m == 0) fail("block-schreier needs m >= 1");
      return block_schreier(m);
    }
    if (t == "initial-pairs") return remove_pattern_initial_pairs();
    if (t == "adjacent-removed") return adjacent_pairs_removed();
    if (t == "derive") return derivative(expr());
    if (t == "union") {
      LazyFamily a = expr();
      return union_of(a, expr());
    }
    if (t == "sets") {
      std::vector<FinSet> members;
      while (peek_set()) members.push_back(set());
      return finite_family(std::move(members));
    }
    if (t == "remove") {
      std::vector<FinSet> removed;
      while (peek_set()) removed.push_back(set());
      if (removed.empty()) fail("remove needs at least one set");
      return remove_sets(expr(), std::move(removed));
    }
    if (t == "restrict") {
      const std::string e = next();
      if (e.size() < 2 || e[0] != '!') fail("restrict expects !{...}");
      FinSet excluded;
      try {
        excluded = parse_finset(std::string_view(e).substr(1));
      } catch (const ParseError&) {
        fail("bad set '" + e + "'");
      }
      return restrict_ground(expr(), excluded);
    }
    if (t == "permute") {
      const std::string p = next();
      Permutation pi;
      try {
        pi = parse_permutation(p);
      } catch (const ParseError&) {
        fail("bad permutation '" + p + "'");
      }
      return permuted(expr(), pi);
    }
    if (auto l = catalog_family(t)) return *l;
    fail("unknown family '" + t + "'");
  }

  std::string_view text_;
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

LazyFamily parse_descriptor(std::string_view text) { return Parser(text).parse(); }

}  // namespace combfam
