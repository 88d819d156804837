#pragma once

#include <string_view>

#include "germforge/polynomial.hpp"

namespace germforge {

/// Parses `+ - * ^`, parentheses, integer and `p/q` literals and variable
/// identifiers of `ring`. `*` may be omitted between a literal and what
/// follows it. Errors carry 1-based line/column relative to (`line`, `column`),
/// the position of the first character of `text` in its source.
Polynomial parse_poly(std::string_view text, const RingPtr& ring, int line = 1, int column = 1);

}  // namespace germforge
