#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "circrt/word.hpp"

namespace circrt {

// The sequence beta = b_1 b_2 ... over {1, 2}: b_i is 1 or 2 when i is 1 or
// 2 (mod 3), and b_{i/3} when 3 divides i. Positions in this header are
// 1-based to match that recurrence; everything else in the library is
// 0-based.

/// First k letters of beta, computed by the recurrence.
Word beta_prefix(std::size_t k);

/// First k letters of the fixed point of 1 -> 121, 2 -> 122.
Word beta_prefix_by_morphism(std::size_t k);

struct BracketedFactor {
  /// 1-based position in beta of the first letter.
  std::size_t start = 0;
  Word factor;
};

/// Leftmost length-k factor of beta that begins and ends with 2. Searches
/// the prefix of length 3k + 9; throws std::logic_error if nothing is found
/// there, since such a factor always exists.
BracketedFactor factor_bracketed_by_two(std::size_t k);

/// Letterwise renaming 1 -> 1, 2 -> 3.
Word sigma(std::span<const Letter> u);

struct PeriodDivisibilityViolation {
  std::size_t start = 0; // 1-based
  std::size_t length = 0;
  std::size_t period = 0;
  unsigned power = 0; // k with |u| >= q + 3^k but 3^k not dividing q
};

/// Checks, over every factor u of `prefix` with |u| <= max_length and every
/// period q of u, that |u| >= q + 3^k implies 3^k | q for k <= max_power.
std::optional<PeriodDivisibilityViolation> find_period_divisibility_violation(
    std::span<const Letter> prefix, std::size_t max_length, unsigned max_power);

} // namespace circrt
