#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "circrt/certificate.hpp"

namespace circrt {

/// valid: every claim re-derived from scratch. trusted: the parts that
/// could be re-run hold and the rest is accepted on its recorded parameters
/// (large refutations, table-dependent checks). invalid: a claim does not
/// hold. inconclusive: the certificate records no decision.
enum class Verdict { valid, trusted, invalid, inconclusive };

std::string to_string(Verdict verdict);

struct CertifyOptions {
  /// Refutations are re-enumerated only up to this length ...
  std::size_t refutation_max_length = 12;
  /// ... and this alphabet size.
  unsigned refutation_max_alphabet = 3;
  unsigned workers = 1;
};

struct CertifyResult {
  Verdict verdict = Verdict::valid;
  std::string detail;
  std::optional<FactorWitness> witness;
};

/// Re-validates a certificate with no trust in whoever produced it.
CertifyResult certify(const Certificate& cert, const CertifyOptions& options = {});

/// Worst verdict over a document; details are joined per certificate.
CertifyResult certify_all(std::span<const Certificate> certs, const CertifyOptions& options = {});

} // namespace circrt
