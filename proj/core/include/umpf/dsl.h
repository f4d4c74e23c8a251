#pragma once

#include <filesystem>
#include <string_view>

#include "umpf/piecewise.h"

namespace umpf {

// Function definition language:
//
//   piecewise
//   [0, 1]    : x
//   (1, 10]   : 1
//   (10, 11)  : x - 9
//   [11, inf) : 2          # comments run to end of line
//
// Formulas are polynomial expressions in x over + - * ^ with rational
// literals (p/q or decimal), optionally divided by a parenthesized
// polynomial. Errors carry 1-based line/column.

PiecewiseFunction parse_function(std::string_view text);
PiecewiseFunction load_function(const std::filesystem::path& path);

/// Parses a single formula; exposed for tests and tools.
RationalFunction parse_formula(std::string_view text);

}  // namespace umpf
