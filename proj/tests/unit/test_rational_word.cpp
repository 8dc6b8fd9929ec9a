#include <doctest.h>

#include "circrt/rational.hpp"
#include "circrt/word.hpp"

using namespace circrt;

TEST_CASE("rationals are reduced and compared exactly")
{
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2).to_string() == "2/1");
  CHECK(Rational(45, 44) > Rational(46, 45));
  CHECK(Rational(7, 5) > Rational(4, 3));
  CHECK(Rational(1'000'000'007, 1'000'000'008) < Rational(1'000'000'008, 1'000'000'009));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing accepts only P/Q and P")
{
  CHECK(Rational::parse("7/5") == Rational(7, 5));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  for (const char* bad : {"", "1.5", "2/0", "2/-1", "/3", "3/", "a/b", "1/2/3", " 2"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("words validate their alphabet")
{
  const Word w = Word::parse("0120");
  CHECK(w.alphabet() == Alphabet::zero_based(3));
  CHECK(w.to_string() == "0120");
  CHECK(Word::parse("1212").alphabet() == Alphabet::numbered(2));
  CHECK_THROWS(Word::parse("3", Alphabet::numbered(2)));
  CHECK_THROWS(Word::parse("012", Alphabet::binary()));
  CHECK_THROWS(Word::parse("01x"));
}

TEST_CASE("large alphabets use the dotted encoding both ways")
{
  const Word w = Word::parse("7.1.2.1", Alphabet::numbered(45));
  CHECK(w.size() == 4);
  CHECK(w[0] == 7);
  CHECK(w.to_string() == "7.1.2.1");
  CHECK(Word::parse("12.3.44", Alphabet::numbered(45)).to_string() == "12.3.44");
  CHECK(Word::parse("", Alphabet::numbered(45)).empty());
}
