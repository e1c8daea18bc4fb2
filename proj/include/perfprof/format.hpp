#pragma once

#include <string>
#include <string_view>

namespace perfprof {

/// Shortest text that reads back to the same double ("inf" for infinity).
std::string format_exact(double value);

/// Six significant digits, trailing zeros trimmed, no exponent for
/// magnitudes in [1e-4, 1e6). Used for every coordinate in emitted SVG.
std::string format_g6(double value);

/// Escapes &, <, >, " and ' for XML text and attribute content.
std::string xml_escape(std::string_view text);

}  // namespace perfprof
