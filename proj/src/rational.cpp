#include "circrt/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace circrt {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
  if (denominator == 0)
    throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const
{
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole)
{
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw std::invalid_argument("malformed rational \"" + std::string(whole) +
                                "\" (expected P/Q)");
  return value;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text), 1);
  const std::int64_t p = parse_integer(text.substr(0, slash), text);
  const std::int64_t q = parse_integer(text.substr(slash + 1), text);
  if (q < 1)
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\" (denominator must be >= 1)");
  return Rational(p, q);
}

} // namespace circrt
