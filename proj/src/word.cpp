#include "circrt/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace circrt {

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters))
{
  if (alphabet_.size == 0)
    throw std::invalid_argument("alphabet must be nonempty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!alphabet_.contains(letters_[i]))
      throw std::invalid_argument("letter " + std::to_string(letters_[i]) +
                                  " at position " + std::to_string(i) +
                                  " is outside the alphabet");
  }
}

std::string format_letters(std::span<const Letter> letters, bool dotted)
{
  std::string out;
  if (!dotted) {
    out.reserve(letters.size());
    for (Letter a : letters) {
      if (a > 9)
        throw std::invalid_argument("letter " + std::to_string(a) +
                                    " needs the dotted encoding");
      out.push_back(static_cast<char>('0' + a));
    }
    return out;
  }
  out.reserve(letters.size() * 3);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i)
      out.push_back('.');
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text, bool dotted)
{
  std::vector<Letter> letters;
  if (!dotted) {
    letters.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed word: unexpected character '" +
                                    std::string(1, c) + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
    return letters;
  }
  if (text.empty())
    return letters;
  std::size_t pos = 0;
  while (true) {
    const auto dot = text.find('.', pos);
    const auto token = text.substr(pos, dot == std::string_view::npos ? text.npos : dot - pos);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        value > 0xFFFF)
      throw std::invalid_argument("malformed word: bad letter \"" + std::string(token) + "\"");
    letters.push_back(static_cast<Letter>(value));
    if (dot == std::string_view::npos)
      break;
    pos = dot + 1;
  }
  return letters;
}

std::string Word::to_string() const
{
  return format_letters(letters_, alphabet_.dotted());
}

Word Word::parse(std::string_view text, Alphabet alphabet)
{
  const bool dotted = alphabet.dotted() || text.find('.') != std::string_view::npos;
  return Word(alphabet, parse_letters(text, dotted));
}

Word Word::parse(std::string_view text)
{
  auto letters = parse_letters(text, text.find('.') != std::string_view::npos);
  if (letters.empty())
    return Word(Alphabet::zero_based(1), {});
  const auto [lo, hi] = std::minmax_element(letters.begin(), letters.end());
  const Alphabet alphabet = *lo == 0 ? Alphabet::zero_based(*hi + 1u) : Alphabet::numbered(*hi);
  return Word(alphabet, std::move(letters));
}

CircularWord::CircularWord(Word representative) : rep_(std::move(representative))
{
  if (rep_.empty())
    throw std::invalid_argument("circular word needs a nonempty representative");
}

} // namespace circrt
