#include "cubsched/rational.hpp"

#include "cubsched/error.hpp"

#include <charconv>

namespace cubsched {

namespace {

long long parse_positive_int(std::string_view text) {
  long long value = 0;
  if (text.empty()) fail(Errc::malformed_input, "empty number");
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::malformed_input, "bad number '" + std::string(text) + "'");
  if (value <= 0)
    fail(Errc::malformed_input, "number must be positive: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational parse_positive_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_positive_int(text));
  long long num = parse_positive_int(text.substr(0, slash));
  long long den = parse_positive_int(text.substr(slash + 1));
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

long long floor_rational(const Rational& value) {
  long long q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) --q;
  return q;
}

long long ceil_rational(const Rational& value) {
  long long q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() > 0) ++q;
  return q;
}

}  // namespace cubsched
