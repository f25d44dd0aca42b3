#include "combfam/ordinal.hpp"

#include <charconv>

#include "combfam/error.hpp"

namespace combfam {

std::string to_string(const OrdinalW2& o) {
  if (o.limit == 0) return std::to_string(o.finite);
  std::string out = "w";
  if (o.limit > 1) out += "*" + std::to_string(o.limit);
  if (o.finite > 0) out += "+" + std::to_string(o.finite);
  return out;
}

namespace {

std::uint32_t parse_u32(std::string_view tok, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("bad ordinal '" + std::string(whole) + "'");
  return v;
}

}  // namespace

OrdinalW2 parse_ordinal(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty ordinal");
  if (text.front() >= '0' && text.front() <= '9') return OrdinalW2::of(parse_u32(text, whole));
  if (text.starts_with("omega")) {
    text.remove_prefix(5);
  } else if (text.front() == 'w') {
    text.remove_prefix(1);
  } else {
    throw ParseError("bad ordinal '" + std::string(whole) + "'");
  }
  OrdinalW2 o{1, 0};
  if (!text.empty() && text.front() == '*') {
    text.remove_prefix(1);
    auto plus = text.find('+');
    o.limit = parse_u32(text.substr(0, plus), whole);
    if (o.limit == 0) throw ParseError("bad ordinal '" + std::string(whole) + "'");
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus);
  }
  if (!text.empty()) {
    if (text.front() != '+') throw ParseError("bad ordinal '" + std::string(whole) + "'");
    o.finite = parse_u32(text.substr(1), whole);
  }
  return o;
}

}  // namespace combfam
