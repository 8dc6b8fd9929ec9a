#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circrt {

using Letter = std::uint16_t;

/// Contiguous range of letters {first, ..., first + size - 1}.
///
/// A_n is {1..n}; the binary alphabet B is {0, 1}; the search engine works
/// over {0..n-1} so that its witnesses read like the classical examples.
struct Alphabet {
  Letter first = 0;
  std::uint32_t size = 0;

  static constexpr Alphabet numbered(std::uint32_t n) { return {1, n}; }
  static constexpr Alphabet binary() { return {0, 2}; }
  static constexpr Alphabet zero_based(std::uint32_t n) { return {0, n}; }

  constexpr bool contains(Letter a) const
  {
    return a >= first && static_cast<std::uint32_t>(a - first) < size;
  }
  /// Words over alphabets with more than nine letters use dotted decimals.
  constexpr bool dotted() const { return size > 9; }

  friend constexpr bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Finite word over an explicit alphabet; every letter is validated on
/// construction.
class Word {
public:
  Word() = default;
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> view() const { return letters_; }
  operator std::span<const Letter>() const { return letters_; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string to_string() const;

  /// Parses digits, or dot-separated decimals when `alphabet.dotted()` or
  /// the text contains a '.'.
  static Word parse(std::string_view text, Alphabet alphabet);

  /// Parses with an inferred alphabet: zero-based when a letter 0 occurs,
  /// otherwise A_k with k the largest letter.
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;

private:
  Alphabet alphabet_{};
  std::vector<Letter> letters_;
};

/// Serializes raw letters: digits, or dot-separated decimals when `dotted`.
std::string format_letters(std::span<const Letter> letters, bool dotted);

/// Splits a serialized word into letters without alphabet validation.
std::vector<Letter> parse_letters(std::string_view text, bool dotted);

/// Circular word stored as one nonempty representative; all of its
/// conjugates denote the same object.
class CircularWord {
public:
  explicit CircularWord(Word representative);

  const Word& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }

private:
  Word rep_;
};

} // namespace circrt
