#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "circrt/certificate.hpp"
#include "circrt/rational.hpp"

namespace circrt {

/// Instance family for the backtracking search. Words are over {0..n-1}.
struct SearchConfig {
  unsigned alphabet_size = 2;
  Rational threshold{2};
  /// false: forbid exponents >= threshold; true: forbid exponents > threshold.
  bool strict = false;
  bool circular = false;
  unsigned workers = 1;
  /// Maximum number of tested extensions; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

/// Depth-first search for the lexicographically least word of the given
/// length, in canonical form (letters first appear in increasing order).
///
/// Extensions are rejected as soon as a suffix reaches the threshold;
/// circular candidates are accepted only after a full scan of the completed
/// word. The tree is split into shards at a fixed prefix depth; the answer
/// and the node count do not depend on `workers`.
///
/// Returns a search-witness certificate (status PASS), a search-refutation
/// certificate (status PASS), or a search-witness certificate with status
/// BUDGET-EXHAUSTED.
Certificate search_witness(const SearchConfig& config, std::size_t length);

/// One certificate per length in [first, last]; empty when first > last.
std::vector<Certificate> search_all_lengths(const SearchConfig& config, std::size_t first,
                                            std::size_t last);

} // namespace circrt
