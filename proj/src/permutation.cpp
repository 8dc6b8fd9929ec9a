#include "circrt/permutation.hpp"

#include <stdexcept>

namespace circrt {

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images))
{
  std::vector<bool> hit(images_.size() + 1, false);
  for (Letter y : images_) {
    if (y < 1 || y > images_.size() || hit[y])
      throw std::invalid_argument("images do not form a permutation");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Letter> img(degree);
  for (std::size_t x = 0; x < degree; ++x)
    img[x] = static_cast<Letter>(x + 1);
  return Permutation(std::move(img));
}

Permutation Permutation::cycle(std::size_t degree, std::size_t length)
{
  if (length > degree)
    throw std::invalid_argument("cycle longer than the permutation degree");
  auto p = identity(degree);
  for (std::size_t x = 1; x <= length; ++x)
    p.images_[x - 1] = static_cast<Letter>(x == length ? 1 : x + 1);
  return p;
}

Letter Permutation::preimage(Letter point) const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == point)
      return static_cast<Letter>(x + 1);
  throw std::out_of_range("point outside the permutation domain");
}

Permutation Permutation::then(const Permutation& next) const
{
  if (next.degree() != degree())
    throw std::invalid_argument("composing permutations of different degree");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out.images_[x] = next.images_[images_[x] - 1];
  return out;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out.images_[images_[x] - 1] = static_cast<Letter>(x + 1);
  return out;
}

bool Permutation::is_identity() const
{
  return leading_fixed_points() == degree();
}

std::size_t Permutation::leading_fixed_points() const
{
  std::size_t k = 0;
  while (k < images_.size() && images_[k] == k + 1)
    ++k;
  return k;
}

std::string Permutation::to_string() const
{
  std::string out;
  std::vector<bool> seen(degree() + 1, false);
  for (Letter x = 1; x <= degree(); ++x) {
    if (seen[x] || image(x) == x)
      continue;
    out += "(";
    for (Letter y = x; !seen[y]; y = image(y)) {
      if (y != x)
        out += " ";
      out += std::to_string(y);
      seen[y] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

} // namespace circrt
