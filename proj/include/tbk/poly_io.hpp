#pragma once

// Line-oriented sparse polynomial format:
//
//   # apoly v1
//   vars L M
//   term <e1> <e2> ... <coefficient>
//
// Terms are written in ascending lexicographic order of their exponent
// vectors; coefficients are decimal with an optional leading '-'.

#include <iosfwd>
#include <string>
#include <string_view>

#include "tbk/multipoly.hpp"

namespace tbk {

inline constexpr std::string_view kApolyHeader = "# apoly v1";

void write_apoly(std::ostream& os, const MultiPoly& p);
std::string format_apoly(const MultiPoly& p);

/// Throws ParseError on any deviation from the format.
MultiPoly read_apoly(std::istream& is);
MultiPoly parse_apoly(std::string_view text);

}  // namespace tbk
