#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "circrt/permutation.hpp"
#include "circrt/word.hpp"

namespace circrt {

/// Image of a binary word under the morphism B* -> S_n sending 0 to the
/// cycle (1 2 ... n-1) and 1 to the cycle (1 2 ... n), composed in word
/// order.
Permutation phi(unsigned n, std::span<const Letter> bits);

/// Pansiot encoding: letter i of the result is the point that the image of
/// the length-i prefix sends to 1. Output is over A_n and has |bits| letters.
Word gamma(unsigned n, std::span<const Letter> bits);

/// A nonempty factor v = bits[start, start + length) whose image fixes
/// 1..k, with length < k (n - 1).
struct StabilizingWitness {
  std::size_t start = 0;
  std::size_t length = 0;
  unsigned k = 0;

  friend bool operator==(const StabilizingWitness&, const StabilizingWitness&) = default;
};

/// First short stabilizing factor in (start, length) order, reporting the
/// largest k whose points are all fixed. With `circular`, factors of the
/// circular word (length at most |bits|) are scanned.
std::optional<StabilizingWitness> find_short_stabilizing(unsigned n, std::span<const Letter> bits,
                                                         bool circular = false);

/// Factor v of length `length` with period `period`, whose length-`period`
/// window at `kernel_factor_start` maps to the identity, and with
/// |v| > n p / (n - 1) - (n - 1).
struct KernelRepetitionWitness {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;
  std::size_t kernel_factor_start = 0;

  friend bool operator==(const KernelRepetitionWitness&, const KernelRepetitionWitness&) = default;
};

/// Scans every start and every period p (not just minimal ones); for each
/// pair the longest p-periodic factor from that start is tested. The first
/// hit in (start, period) order is returned. Circular scans wrap around with
/// factor length capped at |bits|; indices are then reduced modulo |bits|.
std::optional<KernelRepetitionWitness> find_kernel_repetition(unsigned n, std::span<const Letter> bits,
                                                              bool circular, unsigned workers = 1);

/// Length-n / (n-1) test in integers: (n-1)|v| > n p - (n-1)^2.
bool exceeds_kernel_bound(unsigned n, std::size_t length, std::size_t period);

struct RotationTransport {
  /// gamma of the rotation of u starting at offset j.
  Word rotated_gamma;
  /// Image of the first j letters of u; maps each letter of the rotated
  /// gamma(u) to the corresponding letter of `rotated_gamma`.
  Permutation renaming;
};

/// For u in the kernel of phi, relates gamma of a rotation of u to the same
/// rotation of gamma(u), renamed letterwise. Throws std::logic_error if the
/// identity fails to hold.
RotationTransport rotation_rename(unsigned n, std::span<const Letter> bits, std::size_t j);

} // namespace circrt
