#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "mqdimer/cli.hpp"

namespace mqdimer::cli {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, std::string_view why) {
  throw Error(ErrorCode::InvalidConfig, "malformed complex literal '" + std::string(text) + "' at position " +
                                            std::to_string(pos) + ": " + std::string(why));
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Parses a real number occupying text[begin, end) modulo surrounding blanks.
double parse_real(std::string_view text, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  if (begin == end) fail(text, begin, "expected a number");
  std::size_t start = begin;
  if (text[start] == '+') ++start;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
  const auto stop = static_cast<std::size_t>(ptr - text.data());
  if (ec != std::errc{}) fail(text, start, "expected a number");
  if (stop != end) fail(text, stop, "unexpected character");
  if (!std::isfinite(value)) fail(text, begin, "number is not finite");
  return value;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    const double r = parse_real(text, 0, at);
    const double deg = parse_real(text, at + 1, text.size());
    return std::polar(r, deg * std::numbers::pi / 180.0);
  }
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    const double re = parse_real(text, 0, comma);
    const double im = parse_real(text, comma + 1, text.size());
    return {re, im};
  }
  return {parse_real(text, 0, text.size()), 0.0};
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw Error(ErrorCode::IoError, "number formatting failed");
  return std::string(buf, ptr);
}

}  // namespace mqdimer::cli
