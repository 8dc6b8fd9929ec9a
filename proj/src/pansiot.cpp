#include "circrt/pansiot.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circrt/detail/parallel.hpp"

namespace circrt {

namespace {

void require_binary(unsigned n, std::span<const Letter> bits)
{
  if (n < 2)
    throw std::invalid_argument("alphabet size must be at least 2");
  for (Letter b : bits)
    if (b > 1)
      throw std::invalid_argument("expected a binary word over {0,1}");
}

// Images of all points under the running product; appending a letter
// composes with its cycle on the right.
class RunningImage {
public:
  explicit RunningImage(unsigned n) : n_(n), img_(n)
  {
    for (unsigned x = 0; x < n; ++x)
      img_[x] = static_cast<Letter>(x + 1);
  }

  void append(Letter bit)
  {
    const unsigned len = bit ? n_ : n_ - 1;
    for (auto& y : img_)
      if (y <= len)
        y = static_cast<Letter>(y == len ? 1 : y + 1);
  }

  std::size_t leading_fixed() const
  {
    std::size_t k = 0;
    while (k < n_ && img_[k] == k + 1)
      ++k;
    return k;
  }

  bool identity() const { return leading_fixed() == n_; }

private:
  unsigned n_;
  std::vector<Letter> img_;
};

} // namespace

Permutation phi(unsigned n, std::span<const Letter> bits)
{
  require_binary(n, bits);
  std::vector<Letter> img(n);
  for (unsigned x = 0; x < n; ++x)
    img[x] = static_cast<Letter>(x + 1);
  for (Letter b : bits) {
    const unsigned len = b ? n : n - 1;
    for (auto& y : img)
      if (y <= len)
        y = static_cast<Letter>(y == len ? 1 : y + 1);
  }
  return Permutation(std::move(img));
}

Word gamma(unsigned n, std::span<const Letter> bits)
{
  require_binary(n, bits);
  // inverse[y - 1] is the preimage of y under the running product. Composing
  // with the cycle (1 .. len) rotates the first len entries right by one.
  std::vector<Letter> inverse(n);
  for (unsigned x = 0; x < n; ++x)
    inverse[x] = static_cast<Letter>(x + 1);
  std::vector<Letter> out;
  out.reserve(bits.size());
  for (Letter b : bits) {
    const unsigned len = b ? n : n - 1;
    std::rotate(inverse.begin(), inverse.begin() + (len - 1), inverse.begin() + len);
    out.push_back(inverse[0]);
  }
  return Word(Alphabet::numbered(n), std::move(out));
}

std::optional<StabilizingWitness> find_short_stabilizing(unsigned n, std::span<const Letter> bits,
                                                         bool circular)
{
  require_binary(n, bits);
  const std::size_t size = bits.size();
  const std::size_t bound = static_cast<std::size_t>(n - 1) * (n - 1);
  for (std::size_t start = 0; start < size; ++start) {
    const std::size_t room = circular ? size : size - start;
    const std::size_t max_len = std::min(room, bound - 1);
    RunningImage image(n);
    for (std::size_t len = 1; len <= max_len; ++len) {
      image.append(bits[(start + len - 1) % size]);
      const std::size_t k = std::min<std::size_t>(image.leading_fixed(), n - 1);
      if (k >= 1 && len < k * (n - 1))
        return StabilizingWitness{start, len, static_cast<unsigned>(k)};
    }
  }
  return std::nullopt;
}

bool exceeds_kernel_bound(unsigned n, std::size_t length, std::size_t period)
{
  const auto nn = static_cast<std::int64_t>(n);
  return (nn - 1) * static_cast<std::int64_t>(length) >
         nn * static_cast<std::int64_t>(period) - (nn - 1) * (nn - 1);
}

std::optional<KernelRepetitionWitness> find_kernel_repetition(unsigned n, std::span<const Letter> bits,
                                                              bool circular, unsigned workers)
{
  require_binary(n, bits);
  const std::size_t size = bits.size();
  auto at = [&](std::size_t i) { return bits[circular ? i % size : i]; };

  return detail::first_hit<KernelRepetitionWitness>(size, workers, [&](std::size_t start)
                                                        -> std::optional<KernelRepetitionWitness> {
    const std::size_t room = circular ? size : size - start;
    RunningImage image(n);
    for (std::size_t p = 1; p <= room; ++p) {
      image.append(at(start + p - 1));
      if (!image.identity())
        continue;
      std::size_t len = p;
      while (len < room && at(start + len) == at(start + len - p))
        ++len;
      if (exceeds_kernel_bound(n, len, p))
        return KernelRepetitionWitness{start, len, p, start};
    }
    return std::nullopt;
  });
}

RotationTransport rotation_rename(unsigned n, std::span<const Letter> bits, std::size_t j)
{
  require_binary(n, bits);
  if (!phi(n, bits).is_identity())
    throw std::invalid_argument("rotation transport requires u ∈ ker(φₙ)");
  const std::size_t size = bits.size();
  if (size == 0)
    return {Word(Alphabet::numbered(n), {}), Permutation::identity(n)};
  j %= size;

  std::vector<Letter> rotated(bits.begin(), bits.end());
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(j), rotated.end());
  RotationTransport result{gamma(n, rotated), phi(n, bits.first(j))};

  const Word original = gamma(n, bits);
  for (std::size_t i = 0; i < size; ++i) {
    if (result.renaming.image(original[(i + j) % size]) != result.rotated_gamma[i])
      throw std::logic_error("rotation transport identity failed at position " + std::to_string(i));
  }
  return result;
}

} // namespace circrt
