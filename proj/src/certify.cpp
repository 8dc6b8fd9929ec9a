#include "circrt/certify.hpp"

#include <stdexcept>
#include <vector>

#include "circrt/carpi.hpp"
#include "circrt/construction.hpp"
#include "circrt/core_words.hpp"

namespace circrt {

namespace {

CertifyResult invalid(std::string detail, std::optional<FactorWitness> witness = std::nullopt)
{
  return {Verdict::invalid, std::move(detail), std::move(witness)};
}

FactorWitness to_witness(const ExponentReport& r, std::span<const Letter> w, bool dotted)
{
  std::vector<Letter> f;
  for (std::size_t k = 0; k < r.length; ++k)
    f.push_back(w[(r.start + k) % w.size()]);
  return {r.start, r.length, r.period, std::nullopt, format_letters(f, dotted)};
}

Status combined_status(const std::vector<Check>& checks)
{
  bool conditional = false;
  for (const auto& c : checks) {
    if (c.outcome == CheckOutcome::fail)
      return Status::fail;
    if (c.outcome != CheckOutcome::pass)
      conditional = true;
  }
  return conditional ? Status::conditional : Status::pass;
}

CertifyResult certify_construction(const Certificate& cert, const CertifyOptions& options)
{
  if (!cert.t || *cert.t < 1)
    return invalid("construction certificate without a valid t");
  if (cert.alphabet_size < 45)
    return invalid("construction claims need n >= 45");
  const CarpiParameters params = carpi_parameters(cert.alphabet_size);
  if (cert.threshold != Rational(cert.alphabet_size, cert.alphabet_size - 1) || !cert.strict ||
      !cert.circular)
    return invalid("threshold must be n/(n-1), strict, circular");

  std::vector<Letter> letters;
  try {
    letters = parse_letters(cert.word, Alphabet::numbered(params.m).dotted() ||
                                           cert.word.find('.') != std::string::npos);
  } catch (const std::invalid_argument& e) {
    return invalid(std::string("word does not parse: ") + e.what());
  }
  if (letters.size() != cert.length)
    return invalid("recorded length " + std::to_string(cert.length) + " but the word has " +
                   std::to_string(letters.size()) + " letters");

  const Word w(Alphabet{0, 0x10000}, std::move(letters));
  const Certificate fresh = verify_construction_word(cert.alphabet_size, *cert.t, w, options.workers);

  for (const auto& check : fresh.checks) {
    const Check* recorded = cert.find_check(check.name);
    if (!recorded)
      return invalid("missing check \"" + check.name + "\"");
    if (recorded->outcome != check.outcome || recorded->detail != check.detail)
      return invalid("check \"" + check.name + "\" recomputes to " + to_string(check.outcome) +
                         " (" + check.detail + ")",
                     fresh.witness);
  }
  if (cert.witness != fresh.witness)
    return invalid("recorded witness differs from the recomputed one", fresh.witness);

  bool table_dependent = false;
  for (const auto& check : cert.checks) {
    if (fresh.find_check(check.name))
      continue;
    if (check.name == "final-word") {
      const std::uint64_t expected = params.M * params.image_width() * *cert.t;
      if (check.outcome != CheckOutcome::conditional || cert.final_length != expected)
        return invalid("final-word claim must be CONDITIONAL with length " + std::to_string(expected));
    } else if (check.name.rfind("table-", 0) == 0 || check.name.rfind("final-word-", 0) == 0) {
      if (!cert.table_hash)
        return invalid("check \"" + check.name + "\" needs a morphism table hash");
      table_dependent = true;
    } else {
      return invalid("unknown check \"" + check.name + "\"");
    }
  }

  if (cert.status != combined_status(cert.checks))
    return invalid("recorded status " + to_string(cert.status) + " does not follow from the checks");

  std::string detail = "construction claims re-derived (" + to_string(fresh.status) + ")";
  if (table_dependent)
    return {Verdict::trusted, detail + "; table-dependent checks trusted by hash " + *cert.table_hash,
            fresh.witness};
  return {Verdict::valid, detail, fresh.witness};
}

CertifyResult certify_witness(const Certificate& cert)
{
  if (cert.status != Status::pass)
    return invalid("search witness certificate must have status PASS");
  const Alphabet alphabet = Alphabet::zero_based(cert.alphabet_size);
  Word w;
  try {
    w = Word::parse(cert.word, alphabet);
  } catch (const std::invalid_argument& e) {
    return invalid(std::string("witness does not parse: ") + e.what());
  }
  if (w.size() != cert.length || w.empty())
    return invalid("witness length " + std::to_string(w.size()) + " differs from " +
                   std::to_string(cert.length));
  if (cert.threshold <= Rational(1))
    return invalid("threshold must exceed 1");
  const auto verdict = cert.circular ? is_circular_r_free(CircularWord(w), cert.threshold, cert.strict)
                                     : is_r_free(w, cert.threshold, cert.strict);
  if (!verdict.free)
    return invalid("factor of exponent " + verdict.witness->exponent.to_string() + " at " +
                       std::to_string(verdict.witness->start),
                   to_witness(*verdict.witness, w, alphabet.dotted()));
  return {Verdict::valid, "witness re-verified", std::nullopt};
}

CertifyResult certify_refutation(const Certificate& cert, const CertifyOptions& options)
{
  if (cert.status != Status::pass)
    return invalid("refutation certificate must have status PASS");
  if (cert.threshold <= Rational(1) || cert.length < 1 || cert.alphabet_size < 1)
    return invalid("malformed refutation parameters");
  if (cert.length > options.refutation_max_length ||
      cert.alphabet_size > options.refutation_max_alphabet)
    return {Verdict::trusted,
            "refutation beyond the re-enumeration bound; trusted with its parameters", std::nullopt};

  // Every word, no symmetry reduction: n^L candidates.
  const unsigned n = cert.alphabet_size;
  const std::size_t length = cert.length;
  std::vector<Letter> letters(length, 0);
  std::uint64_t checked = 0;
  while (true) {
    const Word w(Alphabet::zero_based(n), letters);
    const bool free = cert.circular
                          ? is_circular_r_free(CircularWord(w), cert.threshold, cert.strict).free
                          : is_r_free(w, cert.threshold, cert.strict).free;
    ++checked;
    if (free)
      return invalid("word " + w.to_string() + " avoids the threshold");
    std::size_t i = length;
    while (i > 0 && letters[i - 1] + 1u == n)
      letters[--i] = 0;
    if (i == 0)
      break;
    ++letters[i - 1];
  }
  return {Verdict::valid, "all " + std::to_string(checked) + " words enumerated", std::nullopt};
}

} // namespace

std::string to_string(Verdict verdict)
{
  switch (verdict) {
  case Verdict::valid: return "VALID";
  case Verdict::trusted: return "TRUSTED";
  case Verdict::invalid: return "INVALID";
  case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CertifyResult certify(const Certificate& cert, const CertifyOptions& options)
{
  if (cert.status == Status::budget_exhausted)
    return {Verdict::inconclusive, "search stopped at its node budget", std::nullopt};
  switch (cert.kind) {
  case CertificateKind::construction: return certify_construction(cert, options);
  case CertificateKind::search_witness: return certify_witness(cert);
  case CertificateKind::search_refutation: return certify_refutation(cert, options);
  }
  return invalid("unknown certificate kind");
}

CertifyResult certify_all(std::span<const Certificate> certs, const CertifyOptions& options)
{
  if (certs.size() == 1)
    return certify(certs.front(), options);
  auto rank = [](Verdict v) {
    switch (v) {
    case Verdict::valid: return 0;
    case Verdict::trusted: return 1;
    case Verdict::inconclusive: return 2;
    case Verdict::invalid: return 3;
    }
    return 3;
  };
  CertifyResult out{Verdict::valid, "", std::nullopt};
  for (std::size_t i = 0; i < certs.size(); ++i) {
    CertifyResult r = certify(certs[i], options);
    out.detail += (i ? "\n" : "") + std::string("[") + std::to_string(i) + "] " + to_string(r.verdict) +
                  ": " + r.detail;
    if (rank(r.verdict) > rank(out.verdict)) {
      out.verdict = r.verdict;
      out.witness = r.witness;
    }
  }
  return out;
}

} // namespace circrt
