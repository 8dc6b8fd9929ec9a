#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "circrt/carpi.hpp"
#include "circrt/certificate.hpp"
#include "circrt/word.hpp"

namespace circrt {

/// Every intermediate of the length-Mt construction over A_m.
struct ConstructionTrace {
  CarpiParameters params;
  std::uint64_t t = 0;
  /// 1-based position in beta where u starts.
  std::size_t u_start = 0;
  /// Leftmost factor of beta of length Mt/4 beginning and ending with 2.
  Word u;
  /// 4 - (|u|_2 mod 4), in 1..4.
  unsigned s = 0;
  /// 3^s 2^s 1^(Mt/4 - 2s).
  Word v;
  /// Positions 0 (mod 4) carry the Lambda letter, 2 (mod 4) carry v, odd
  /// positions carry u sigma(u).
  Word w;
};

/// Requires n >= 45 and t >= 1.
ConstructionTrace build_w(unsigned n, std::uint64_t t);

/// Re-derives every claim from (n, t, w) alone: |w| = M t, Lambda_t
/// membership, psi kernel membership, and no psi-kernel repetition in the
/// circular word. Never throws for a bad word; failures become FAIL checks
/// with the offending witness embedded.
Certificate verify_construction_word(unsigned n, std::uint64_t t, const Word& w, unsigned workers = 1);

/// verify_construction_word on the trace's word after checking the trace's
/// parameters are well formed.
Certificate verify_construction(const ConstructionTrace& trace, unsigned workers = 1);

struct PipelineOptions {
  /// Direct exponent scan of the final word only when its length is at most this.
  std::uint64_t scan_budget = 16384;
  unsigned workers = 1;
  std::size_t cross_check_samples = 200;
  std::uint64_t seed = 0x5eed;
};

struct PipelineResult {
  Certificate certificate;
  /// gamma_n(f_n(w)); present only when a table was supplied.
  std::optional<Word> final_word;
};

/// Without a table the final-word claim is recorded as CONDITIONAL. With a
/// table the final word is produced, the table is cross-checked against the
/// kernel criterion and spot-checked for short stabilizing factors, and the
/// final word is scanned directly when it fits the budget.
PipelineResult full_pipeline(unsigned n, std::uint64_t t, const MorphismTable* table,
                             const PipelineOptions& options = {});

} // namespace circrt
