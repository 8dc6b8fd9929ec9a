#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace circrt {

namespace detail {
__extension__ typedef __int128 wide_int;
}

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Used for exponents and thresholds; every comparison is done by
/// cross-multiplication in 128-bit arithmetic, so no verdict ever depends
/// on floating point.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Text form is always "p/q", including integers ("2/1").
  std::string to_string() const;

  /// Accepts "P/Q" (Q >= 1) or a bare integer "P". Decimals are rejected.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
  {
    const auto lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
    const auto rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r)
  {
    return os << r.to_string();
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace circrt
