#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circrt/word.hpp"

namespace circrt {

/// Bijection on the points {1..n}, acting on the right.
///
/// `p.then(q)` is the permutation x -> q(p(x)), so the image of a word
/// under a morphism into permutations is the left-to-right product of the
/// images of its letters.
class Permutation {
public:
  Permutation() = default;
  /// `images[x - 1]` is the image of point x; must be a bijection on 1..n.
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::size_t degree);
  /// The cycle (1 2 ... length) on {1..degree}.
  static Permutation cycle(std::size_t degree, std::size_t length);

  std::size_t degree() const { return images_.size(); }
  Letter image(Letter point) const { return images_[point - 1]; }
  Letter preimage(Letter point) const;
  const std::vector<Letter>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  bool is_identity() const;
  /// Largest k such that 1..k are all fixed.
  std::size_t leading_fixed_points() const;

  /// Cycle notation, e.g. "(1 2)(3)" omitting fixed points; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Letter> images_;
};

} // namespace circrt
