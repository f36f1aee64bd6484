#include "bdt/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "bdt/error.hpp"

namespace bdt::io {

std::string fixed(double value, int decimals) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::array<char, 512> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw Error(Errc::invalid_parameter, "value too large to format");
  std::string text(buf.data(), ptr);
  // "-0.000000" reads badly in tables.
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string round_trip(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw Error(Errc::invalid_parameter, "value could not be formatted");
  return std::string(buf.data(), ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::malformed_input, "not a number: '" + text + "'");
  }
  return value;
}

}  // namespace bdt::io
