#pragma once

#include <string>

namespace bdt::io {

/// Fixed-point text with `decimals` digits after '.', independent of the
/// process locale.
std::string fixed(double value, int decimals = 6);

/// Shortest text that parses back to exactly `value`.
std::string round_trip(double value);

/// Parses a full string as a double; throws Errc::malformed_input otherwise.
double parse_double(const std::string& text);

}  // namespace bdt::io
