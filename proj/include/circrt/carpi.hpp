#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circrt/word.hpp"

namespace circrt {

/// m = floor((n-3)/6), ell = floor(n/2), M = 4^(m-2), defined for n >= 27.
struct CarpiParameters {
  unsigned n = 0;
  unsigned m = 0;
  unsigned ell = 0;
  std::uint64_t M = 0;

  /// Uniform image length (n-1)(ell+1) of the morphism f_n.
  std::uint64_t image_width() const { return static_cast<std::uint64_t>(n - 1) * (ell + 1); }

  friend bool operator==(const CarpiParameters&, const CarpiParameters&) = default;
};

CarpiParameters carpi_parameters(unsigned n);

/// Kernel criterion over A_m: every letter count is divisible by 4.
/// Letters outside 1..m are rejected.
bool in_psi_kernel(unsigned m, std::span<const Letter> v);

/// Factor of length `length` from `start` with period `period` whose window
/// at `kernel_window_start` has all letter counts divisible by 4, and with
/// (n-1)(|v|+1) >= n q - 3.
struct PsiKernelWitness {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;
  std::size_t kernel_window_start = 0;

  friend bool operator==(const PsiKernelWitness&, const PsiKernelWitness&) = default;
};

/// (n-1)(length+1) >= n period - 3, evaluated exactly.
bool meets_psi_bound(unsigned n, std::size_t length, std::size_t period);

/// First psi_n-kernel repetition in (start, period) order. Every period is
/// tried at every start; for each pair the longest periodic extension is
/// tested. Circular scans wrap, with factor length capped at |w|.
std::optional<PsiKernelWitness> find_psi_kernel_repetition(const CarpiParameters& params,
                                                           std::span<const Letter> w, bool circular,
                                                           unsigned workers = 1);

/// Letter prescribed at a position i = 0 (mod 4): the largest a in A_m with
/// 4^(a-3) dividing i (so m at i = 0).
Letter lambda_letter(unsigned m, std::uint64_t i);

struct LambdaVerdict {
  bool member = true;
  std::optional<std::size_t> first_mismatch;
};

/// Membership in Lambda_t. Throws if |x| != M t.
LambdaVerdict lambda_membership(const CarpiParameters& params, std::uint64_t t,
                                std::span<const Letter> x);

/// Binary images of f_n, one per letter of A_m, as read from a table file.
struct MorphismTable {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Word> images;
  /// SHA-256 of the source bytes, lowercase hex.
  std::string content_hash;

  std::uint64_t width() const { return images.empty() ? 0 : images.front().size(); }
};

class TableError : public std::runtime_error {
public:
  enum class Kind { header, row_count, width, non_binary };

  TableError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Parses "n m" followed by m rows of 0/1 characters, each of width
/// (n-1)(floor(n/2)+1).
MorphismTable load_fn_table(std::string_view source);
MorphismTable load_fn_table_file(const std::string& path);

/// f_n(w) as a binary word.
Word apply_fn(const MorphismTable& table, std::span<const Letter> w);

/// gamma_n(f_n(w)); length |w| (n-1)(ell+1).
Word pipeline(const CarpiParameters& params, const MorphismTable& table, std::span<const Letter> w);

/// Outcome of checking a table against the letter-count kernel criterion.
struct TableCrossCheck {
  bool consistent = true;
  std::size_t words_checked = 0;
  /// First word (over A_m) where phi(f(v)) = id disagrees with the criterion.
  std::optional<Word> counterexample;
};

/// Computes phi_n(f_n(v)) directly for the single letters, their fourth
/// powers, and `samples` random words (half of them forced into the
/// kernel), comparing against in_psi_kernel.
TableCrossCheck cross_check_kernel_criterion(const MorphismTable& table, std::size_t samples,
                                             std::uint64_t seed);

} // namespace circrt
