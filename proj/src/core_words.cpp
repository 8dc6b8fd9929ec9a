#include "circrt/core_words.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace circrt {

namespace {

void require_threshold(const Rational& r)
{
  if (r <= Rational(1))
    throw std::invalid_argument("threshold must exceed 1, got " + r.to_string());
}

// For each start in [0, starts) runs the prefix function over
// text[start, start + cap(start)) and keeps the factor of largest
// length / minimal-period. Strict '>' keeps the earliest start and, within
// a start, the shortest (hence smallest-period) factor among ties.
template <class CapFn>
ExponentReport scan_max_exponent(std::span<const Letter> text, std::size_t starts, CapFn cap)
{
  ExponentReport best{0, 1, 1, Rational(1)};
  std::uint64_t best_len = 1, best_period = 1;
  std::vector<std::uint32_t> border;

  for (std::size_t i = 0; i < starts; ++i) {
    const std::size_t limit = cap(i);
    // A factor of length len has exponent at most len, so nothing here can
    // beat the current best.
    if (static_cast<std::uint64_t>(limit) * best_period <= best_len)
      continue;
    const Letter* s = text.data() + i;
    border.assign(limit, 0);
    for (std::size_t len = 2; len <= limit; ++len) {
      std::uint32_t k = border[len - 2];
      while (k > 0 && s[len - 1] != s[k])
        k = border[k - 1];
      if (s[len - 1] == s[k])
        ++k;
      border[len - 1] = k;
      const std::uint64_t period = len - k;
      if (static_cast<std::uint64_t>(len) * best_period > best_len * period) {
        best_len = len;
        best_period = period;
        best = {i, len, static_cast<std::size_t>(period), Rational(0)};
      }
    }
  }
  best.exponent = Rational(static_cast<std::int64_t>(best_len), static_cast<std::int64_t>(best_period));
  return best;
}

} // namespace

std::size_t minimal_period(std::span<const Letter> w)
{
  if (w.empty())
    throw std::invalid_argument("empty word has no exponent");
  std::vector<std::uint32_t> border(w.size(), 0);
  for (std::size_t len = 2; len <= w.size(); ++len) {
    std::uint32_t k = border[len - 2];
    while (k > 0 && w[len - 1] != w[k])
      k = border[k - 1];
    if (w[len - 1] == w[k])
      ++k;
    border[len - 1] = k;
  }
  return w.size() - border.back();
}

ExponentReport exponent_report(std::span<const Letter> w)
{
  const std::size_t p = minimal_period(w);
  return {0, w.size(), p,
          Rational(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(p))};
}

ExponentReport max_exponent_factor(std::span<const Letter> w)
{
  if (w.empty())
    throw std::invalid_argument("empty word has no exponent");
  return scan_max_exponent(w, w.size(), [&](std::size_t i) { return w.size() - i; });
}

ExponentReport circular_max_exponent(const CircularWord& cw)
{
  const auto& rep = cw.representative().letters();
  const std::size_t n = rep.size();
  std::vector<Letter> doubled;
  doubled.reserve(2 * n);
  doubled.insert(doubled.end(), rep.begin(), rep.end());
  doubled.insert(doubled.end(), rep.begin(), rep.end());
  return scan_max_exponent(doubled, n, [n](std::size_t) { return n; });
}

FreenessVerdict is_r_free(std::span<const Letter> w, const Rational& r, bool strict)
{
  require_threshold(r);
  if (w.empty())
    return {};
  auto report = max_exponent_factor(w);
  if (!violates(report.exponent, r, strict))
    return {};
  return {false, report};
}

FreenessVerdict is_circular_r_free(const CircularWord& cw, const Rational& r, bool strict)
{
  require_threshold(r);
  auto report = circular_max_exponent(cw);
  if (!violates(report.exponent, r, strict))
    return {};
  return {false, report};
}

Word rotate(const Word& w, std::size_t j)
{
  if (w.empty())
    return w;
  std::vector<Letter> out(w.letters());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(j % w.size()), out.end());
  return Word(w.alphabet(), std::move(out));
}

std::vector<Word> conjugates(const Word& w)
{
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  std::set<std::vector<Letter>> seen;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Word r = rotate(w, j);
    if (seen.insert(r.letters()).second)
      out.push_back(std::move(r));
  }
  return out;
}

Word circumnavigation(const Word& w, std::size_t start)
{
  if (w.empty())
    throw std::invalid_argument("circumnavigation of an empty word");
  std::vector<Letter> out;
  out.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.push_back(w[(start + k) % w.size()]);
  return Word(w.alphabet(), std::move(out));
}

} // namespace circrt
