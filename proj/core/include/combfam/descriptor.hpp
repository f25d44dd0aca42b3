#pragma once

#include <string_view>

#include "combfam/lazy_family.hpp"

namespace combfam {

/// Parses the prefix descriptor form, e.g. `remove {2 3} (cube 2)`,
/// `permute [1>3 2>1 3>2] (cube 2)`, `union (X) (Y)`, `restrict !{1} X`,
/// `sets {0} {1}`, `derive X`, or a catalog name. Sub-expressions that
/// contain spaces are parenthesised; LazyFamily::descriptor() prints the
/// same form, so parse then print is the identity on canonical text.
/// Throws ParseError on malformed input.
LazyFamily parse_descriptor(std::string_view text);

}  // namespace combfam
