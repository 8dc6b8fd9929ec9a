#include "circrt/construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "circrt/beta.hpp"
#include "circrt/core_words.hpp"
#include "circrt/hash.hpp"
#include "circrt/pansiot.hpp"

namespace circrt {

namespace {

std::string circular_factor(std::span<const Letter> w, std::size_t start, std::size_t length,
                            bool dotted)
{
  std::vector<Letter> f;
  f.reserve(length);
  for (std::size_t k = 0; k < length; ++k)
    f.push_back(w[(start + k) % w.size()]);
  return format_letters(f, dotted);
}

Status summarize(const std::vector<Check>& checks)
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

} // namespace

ConstructionTrace build_w(unsigned n, std::uint64_t t)
{
  if (n < 45)
    throw std::invalid_argument("construction proof requires m ≥ 7 (n >= 45), got n = " +
                                std::to_string(n));
  if (t < 1)
    throw std::invalid_argument("construction needs t >= 1");

  ConstructionTrace trace;
  trace.params = carpi_parameters(n);
  trace.t = t;
  const std::uint64_t length = trace.params.M * t;
  const std::size_t quarter = length / 4;

  auto bracketed = factor_bracketed_by_two(quarter);
  trace.u_start = bracketed.start;
  trace.u = std::move(bracketed.factor);

  std::size_t twos = 0;
  for (Letter a : trace.u.letters())
    twos += a == 2;
  trace.s = static_cast<unsigned>(4 - twos % 4);

  // Index 2s carries 2 and the ones start at 2s + 1, so |v|_2 = s.
  std::vector<Letter> v(quarter);
  for (std::size_t i = 1; i <= quarter; ++i)
    v[i - 1] = i <= trace.s ? 3 : (i <= 2 * trace.s ? 2 : 1);
  trace.v = Word(Alphabet::numbered(3), std::move(v));

  std::vector<Letter> u_sigma(trace.u.letters());
  const Word su = sigma(trace.u);
  u_sigma.insert(u_sigma.end(), su.letters().begin(), su.letters().end());

  std::vector<Letter> w(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    if (i % 4 == 0)
      w[i] = lambda_letter(trace.params.m, i);
    else if (i % 4 == 2)
      w[i] = trace.v[(i + 2) / 4 - 1];
    else
      w[i] = u_sigma[(i + 1) / 2 - 1];
  }
  trace.w = Word(Alphabet::numbered(trace.params.m), std::move(w));
  return trace;
}

Certificate verify_construction_word(unsigned n, std::uint64_t t, const Word& w, unsigned workers)
{
  const CarpiParameters params = carpi_parameters(n);
  const bool dotted = Alphabet::numbered(params.m).dotted();

  Certificate cert;
  cert.kind = CertificateKind::construction;
  cert.alphabet_size = n;
  cert.t = t;
  cert.length = w.size();
  cert.threshold = Rational(n, n - 1);
  cert.strict = true;
  cert.circular = true;
  cert.word = format_letters(w.view(), dotted || w.alphabet().dotted());

  const std::uint64_t expected = params.M * t;
  const bool length_ok = w.size() == expected;
  cert.checks.push_back({"length", length_ok ? CheckOutcome::pass : CheckOutcome::fail,
                         "|w| = " + std::to_string(w.size()) + ", M t = " + std::to_string(expected)});

  if (length_ok) {
    const auto lambda = lambda_membership(params, t, w);
    cert.checks.push_back(
        {"lambda-membership", lambda.member ? CheckOutcome::pass : CheckOutcome::fail,
         lambda.member ? "every position matches Lambda_t"
                       : "position " + std::to_string(*lambda.first_mismatch) + " carries " +
                             std::to_string(w[*lambda.first_mismatch])});
  } else {
    cert.checks.push_back({"lambda-membership", CheckOutcome::fail, "length mismatch"});
  }

  bool letters_ok = true;
  for (Letter a : w.letters())
    letters_ok = letters_ok && a >= 1 && a <= params.m;
  if (!letters_ok) {
    cert.checks.push_back({"psi-kernel", CheckOutcome::fail, "letters outside A_m"});
    cert.checks.push_back({"no-psi-kernel-repetition", CheckOutcome::skipped, "letters outside A_m"});
    cert.status = Status::fail;
    return cert;
  }

  std::vector<std::uint64_t> counts(params.m + 1, 0);
  for (Letter a : w.letters())
    ++counts[a];
  std::string count_text;
  bool kernel = true;
  for (unsigned a = 1; a <= params.m; ++a) {
    kernel = kernel && counts[a] % 4 == 0;
    count_text += (a > 1 ? "," : "") + std::to_string(counts[a]);
  }
  cert.checks.push_back({"psi-kernel", kernel ? CheckOutcome::pass : CheckOutcome::fail,
                         "letter counts (" + count_text + ")"});

  if (w.empty()) {
    cert.checks.push_back({"no-psi-kernel-repetition", CheckOutcome::skipped, "empty word"});
  } else if (auto rep = find_psi_kernel_repetition(params, w, true, workers)) {
    cert.checks.push_back({"no-psi-kernel-repetition", CheckOutcome::fail,
                           "period " + std::to_string(rep->period) + ", length " +
                               std::to_string(rep->length) + " from " + std::to_string(rep->start)});
    cert.witness = FactorWitness{rep->start, rep->length, rep->period, rep->kernel_window_start,
                                 circular_factor(w, rep->start, rep->length, dotted)};
  } else {
    cert.checks.push_back({"no-psi-kernel-repetition", CheckOutcome::pass,
                           "full circular scan over all starts and periods"});
  }

  cert.status = summarize(cert.checks);
  return cert;
}

Certificate verify_construction(const ConstructionTrace& trace, unsigned workers)
{
  if (trace.t < 1 || trace.params.n < 45 || !(trace.params == carpi_parameters(trace.params.n)))
    throw std::invalid_argument("malformed construction trace");
  return verify_construction_word(trace.params.n, trace.t, trace.w, workers);
}

PipelineResult full_pipeline(unsigned n, std::uint64_t t, const MorphismTable* table,
                             const PipelineOptions& options)
{
  const ConstructionTrace trace = build_w(n, t);
  const CarpiParameters& params = trace.params;
  PipelineResult result{verify_construction(trace, options.workers), std::nullopt};
  Certificate& cert = result.certificate;
  cert.final_length = params.M * params.image_width() * t;

  if (!table) {
    cert.checks.push_back({"final-word", CheckOutcome::conditional,
                           "no f_n table supplied; the final word of length " +
                               std::to_string(*cert.final_length) +
                               " is n/(n-1)+-free given the w-level checks and Carpi's f_n"});
    cert.status = summarize(cert.checks);
    return result;
  }

  if (table->n != params.n || table->m != params.m)
    throw std::invalid_argument("morphism table (n=" + std::to_string(table->n) + ", m=" +
                                std::to_string(table->m) + ") does not match n = " +
                                std::to_string(n));
  cert.table_hash = table->content_hash;

  const auto cross = cross_check_kernel_criterion(*table, options.cross_check_samples, options.seed);
  cert.checks.push_back({"table-kernel-criterion",
                         cross.consistent ? CheckOutcome::pass : CheckOutcome::fail,
                         cross.consistent ? std::to_string(cross.words_checked) + " sampled words agree"
                                          : "phi(f(v)) disagrees with letter counts for v = " +
                                                cross.counterexample->to_string()});

  // Factors starting in the image of a and running into the image of b.
  std::optional<std::string> stabilizing;
  for (Letter a = 1; a <= params.m && !stabilizing; ++a) {
    const Letter b = static_cast<Letter>(a % params.m + 1);
    const Word bits = apply_fn(*table, std::vector<Letter>{a, b});
    if (auto hit = find_short_stabilizing(n, bits))
      stabilizing = "f(" + std::to_string(a) + std::to_string(b) + ") has a " +
                    std::to_string(hit->k) + "-stabilizing factor of length " +
                    std::to_string(hit->length) + " at " + std::to_string(hit->start);
  }
  cert.checks.push_back({"table-short-stabilizing",
                         stabilizing ? CheckOutcome::fail : CheckOutcome::pass,
                         stabilizing ? *stabilizing : "no short stabilizing factor across letter pairs"});

  const Word image = apply_fn(*table, trace.w);
  const bool in_kernel = phi(n, image).is_identity();
  cert.checks.push_back({"final-word-kernel", in_kernel ? CheckOutcome::pass : CheckOutcome::fail,
                         in_kernel ? "f_n(w) lies in the kernel of phi_n"
                                   : "f_n(w) is not in the kernel of phi_n"});

  Word final_word = gamma(n, image);
  const std::string final_text = final_word.to_string();
  cert.final_word_hash = sha256_hex(final_text);

  if (final_word.size() > options.scan_budget) {
    cert.checks.push_back({"final-word-scan", CheckOutcome::skipped,
                           "length " + std::to_string(final_word.size()) + " exceeds scan budget " +
                               std::to_string(options.scan_budget)});
  } else {
    const auto verdict = is_circular_r_free(CircularWord(final_word), Rational(n, n - 1), true);
    cert.checks.push_back(
        {"final-word-scan", verdict.free ? CheckOutcome::pass : CheckOutcome::fail,
         verdict.free ? "no circular factor of exponent > n/(n-1)"
                      : "factor of exponent " + verdict.witness->exponent.to_string() + " at " +
                            std::to_string(verdict.witness->start)});
  }
  cert.status = summarize(cert.checks);
  result.final_word = std::move(final_word);
  return result;
}

} // namespace circrt
