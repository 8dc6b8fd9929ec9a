#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "circrt/rational.hpp"
#include "circrt/word.hpp"

namespace circrt {

/// A factor together with its minimal period and the exact exponent
/// length / period. For circular scans `start` is an index into the
/// representative and the factor may wrap around.
struct ExponentReport {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;
  Rational exponent;

  friend bool operator==(const ExponentReport&, const ExponentReport&) = default;
};

struct FreenessVerdict {
  bool free = true;
  /// Factor of maximal exponent; set only when the word is not free.
  std::optional<ExponentReport> witness;
};

/// Smallest p such that w[i + p] == w[i] for every valid i.
std::size_t minimal_period(std::span<const Letter> w);

/// Minimal period and exponent of the whole (nonempty) word.
ExponentReport exponent_report(std::span<const Letter> w);

/// Factor of maximal exponent over all factors of a nonempty linear word.
/// Ties go to the earliest start, then the smallest period.
ExponentReport max_exponent_factor(std::span<const Letter> w);

/// Maximal exponent over every factor of every conjugate, factor length
/// capped at |w|. Same tie-break as the linear scan (start in the
/// representative).
ExponentReport circular_max_exponent(const CircularWord& cw);

/// r-free (strict = false: no exponent >= r) or r+-free (strict = true:
/// no exponent > r). Requires r > 1.
FreenessVerdict is_r_free(std::span<const Letter> w, const Rational& r, bool strict);
FreenessVerdict is_circular_r_free(const CircularWord& cw, const Rational& r, bool strict);

/// True when `exponent` violates the threshold under the strict/non-strict rule.
inline bool violates(const Rational& exponent, const Rational& r, bool strict)
{
  return strict ? exponent > r : exponent >= r;
}

/// j-th rotation w_j ... w_{k-1} w_0 ... w_{j-1}; j is taken modulo |w|.
Word rotate(const Word& w, std::size_t j);

/// Distinct rotations, in order of first appearance by offset.
std::vector<Word> conjugates(const Word& w);

/// a v a where a v is the rotation starting at `start`.
Word circumnavigation(const Word& w, std::size_t start);

/// Range over the circumnavigations of a circular word, keyed by start.
class Circumnavigations {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;

    iterator(const Word* w, std::size_t start) : w_(w), start_(start) {}
    Word operator*() const { return circumnavigation(*w_, start_); }
    std::size_t start() const { return start_; }
    iterator& operator++()
    {
      ++start_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.start_ == b.start_; }

  private:
    const Word* w_;
    std::size_t start_;
  };

  explicit Circumnavigations(const CircularWord& cw) : rep_(&cw.representative()) {}
  iterator begin() const { return {rep_, 0}; }
  iterator end() const { return {rep_, rep_->size()}; }

private:
  const Word* rep_;
};

} // namespace circrt
