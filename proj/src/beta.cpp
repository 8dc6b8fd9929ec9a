#include "circrt/beta.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace circrt {

namespace {
constexpr Alphabet kBinaryNumbered = Alphabet::numbered(2);
}

Word beta_prefix(std::size_t k)
{
  std::vector<Letter> b(k);
  for (std::size_t i = 1; i <= k; ++i) {
    switch (i % 3) {
    case 1: b[i - 1] = 1; break;
    case 2: b[i - 1] = 2; break;
    default: b[i - 1] = b[i / 3 - 1]; break;
    }
  }
  return Word(kBinaryNumbered, std::move(b));
}

Word beta_prefix_by_morphism(std::size_t k)
{
  std::vector<Letter> cur{1};
  while (cur.size() < k) {
    std::vector<Letter> next;
    next.reserve(cur.size() * 3);
    for (Letter a : cur) {
      next.push_back(1);
      next.push_back(2);
      next.push_back(a);
    }
    cur = std::move(next);
  }
  cur.resize(k);
  return Word(kBinaryNumbered, std::move(cur));
}

BracketedFactor factor_bracketed_by_two(std::size_t k)
{
  if (k == 0)
    throw std::invalid_argument("bracketed factor length must be positive");
  const Word prefix = beta_prefix(3 * k + 9);
  for (std::size_t i = 0; i + k <= prefix.size(); ++i) {
    if (prefix[i] == 2 && prefix[i + k - 1] == 2) {
      std::vector<Letter> f(prefix.letters().begin() + static_cast<std::ptrdiff_t>(i),
                            prefix.letters().begin() + static_cast<std::ptrdiff_t>(i + k));
      return {i + 1, Word(kBinaryNumbered, std::move(f))};
    }
  }
  throw std::logic_error("soundness bug: no factor of length " + std::to_string(k) +
                         " bracketed by 2 in the first " + std::to_string(prefix.size()) +
                         " letters of beta");
}

Word sigma(std::span<const Letter> u)
{
  std::vector<Letter> out;
  out.reserve(u.size());
  for (Letter a : u) {
    if (a != 1 && a != 2)
      throw std::invalid_argument("sigma expects a word over {1,2}, got letter " +
                                  std::to_string(a));
    out.push_back(a == 1 ? 1 : 3);
  }
  return Word(Alphabet::numbered(3), std::move(out));
}

std::optional<PeriodDivisibilityViolation> find_period_divisibility_violation(
    std::span<const Letter> prefix, std::size_t max_length, unsigned max_power)
{
  std::vector<std::size_t> powers{1};
  for (unsigned k = 1; k <= max_power; ++k)
    powers.push_back(powers.back() * 3);

  const std::size_t size = prefix.size();
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t room = std::min(max_length, size - i);
    for (std::size_t q = 1; q < room; ++q) {
      // Longest factor from i with period q, capped at max_length; every
      // shorter factor from i of length >= q also has period q.
      std::size_t len = q;
      while (len < room && prefix[i + len] == prefix[i + len - q])
        ++len;
      for (unsigned k = 1; k <= max_power; ++k) {
        if (len >= q + powers[k] && q % powers[k] != 0)
          return PeriodDivisibilityViolation{i + 1, q + powers[k], q, k};
      }
    }
  }
  return std::nullopt;
}

} // namespace circrt
