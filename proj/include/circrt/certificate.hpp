#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circrt/rational.hpp"

namespace circrt {

enum class CertificateKind { construction, search_witness, search_refutation };

/// pass: the recorded claim was established. fail: it was refuted (the
/// witness says why). conditional: established up to an external guarantee.
/// budget_exhausted: a search stopped before deciding anything.
enum class Status { pass, fail, conditional, budget_exhausted };

enum class CheckOutcome { pass, fail, skipped, conditional };

struct Check {
  std::string name;
  CheckOutcome outcome = CheckOutcome::pass;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Offending factor embedded in FAIL certificates (and in certify's answer).
struct FactorWitness {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;
  std::optional<std::size_t> window_start;
  std::string factor;

  friend bool operator==(const FactorWitness&, const FactorWitness&) = default;
};

/// Machine-checkable record of a claim; certify() re-derives everything in
/// it from the parameters and the word alone.
struct Certificate {
  CertificateKind kind = CertificateKind::construction;
  Status status = Status::pass;
  unsigned alphabet_size = 0;
  std::optional<std::uint64_t> t;
  std::uint64_t length = 0;
  Rational threshold{1};
  bool strict = false;
  bool circular = true;
  std::string word;
  std::vector<Check> checks;
  std::optional<FactorWitness> witness;
  std::optional<std::string> table_hash;
  std::optional<std::uint64_t> final_length;
  std::optional<std::string> final_word_hash;
  std::optional<std::uint64_t> nodes;

  const Check* find_check(std::string_view name) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string to_string(CertificateKind kind);
std::string to_string(Status status);
std::string to_string(CheckOutcome outcome);

/// Stable JSON text: fixed key order, words as strings, rationals as "p/q",
/// hashes in hex. Ends with a newline.
std::string to_text(const Certificate& cert);
/// A document holding several certificates (one per searched length).
std::string to_text(std::span<const Certificate> certs);

/// Accepts either document shape; throws CertificateFormatError on anything
/// malformed or truncated.
std::vector<Certificate> parse_certificates(std::string_view text);

} // namespace circrt
