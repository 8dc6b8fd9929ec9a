#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "circrt/beta.hpp"
#include "circrt/carpi.hpp"
#include "circrt/certify.hpp"
#include "circrt/construction.hpp"
#include "circrt/core_words.hpp"
#include "circrt/pansiot.hpp"
#include "circrt/search.hpp"
#include "convert.hpp"

using namespace circrt;

namespace {

// A criterion body returns a short summary and throws Failure on any mismatch.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
  if (!ok)
    throw Failure(what);
}

std::string label(unsigned n, std::uint64_t t) { return "n=" + std::to_string(n) + " t=" + std::to_string(t); }

std::string construction_certification()
{
  for (unsigned n : {45u, 51u, 57u}) {
    for (std::uint64_t t : {1u, 2u}) {
      const auto trace = build_w(n, t);
      const auto cert = verify_construction(trace);
      expect(cert.length == trace.params.M * t, label(n, t) + ": |w| != Mt");
      for (const char* check : {"length", "lambda-membership", "psi-kernel", "no-psi-kernel-repetition"}) {
        const Check* c = cert.find_check(check);
        expect(c && c->outcome == CheckOutcome::pass, label(n, t) + ": check " + check + " did not pass");
      }
      expect(cert.status == Status::pass, label(n, t) + ": status " + to_string(cert.status));
      expect(certify(cert).verdict == Verdict::valid, label(n, t) + ": certificate not re-verified");
    }
  }
  return "n in {45,51,57}, t in {1,2}: all six certificates PASS and re-verify";
}

std::string negative_control()
{
  for (unsigned n : {45u, 51u, 57u}) {
    for (std::uint64_t t : {1u, 2u}) {
      const auto params = carpi_parameters(n);
      const Word ones(Alphabet::numbered(params.m), std::vector<Letter>(params.M * t, 1));
      const auto cert = verify_construction_word(n, t, ones);
      expect(cert.status == Status::fail, label(n, t) + ": 1^(Mt) did not FAIL");
      expect(cert.witness && cert.witness->period == 4, label(n, t) + ": witness period is not 4");
      expect(certify(cert).verdict == Verdict::valid, label(n, t) + ": FAIL certificate not re-verified");
    }
  }
  return "1^(Mt) FAILs with a q = 4 witness for all six instances";
}

std::string lambda_lemmas()
{
  const auto p = carpi_parameters(45);
  std::mt19937_64 rng(2024);
  std::size_t factors = 0;
  for (int sample = 0; sample < 100; ++sample) {
    const std::uint64_t t = 1 + sample % 2;
    std::vector<Letter> x(p.M * t);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = i % 4 == 0 ? lambda_letter(p.m, i) : static_cast<Letter>(1 + rng() % 3);
    expect(lambda_membership(p, t, x).member, "sample " + std::to_string(sample) + " not in Lambda_t");

    const std::size_t L = x.size();
    for (std::size_t start = 0; start < L; ++start) {
      unsigned c[16] = {};
      unsigned off = 0;
      for (std::size_t len = 1; len <= L; ++len) {
        unsigned& k = c[x[(start + len - 1) % L]];
        if (k == 0)
          ++off;
        k = (k + 1) & 3;
        if (k == 0)
          --off;
        if (off == 0) {
          ++factors;
          expect(len % p.M == 0, "kernel factor of length " + std::to_string(len) + " at " +
                                     std::to_string(start) + " in sample " + std::to_string(sample));
        }
      }
    }
    unsigned counts[16] = {};
    for (Letter a : x)
      ++counts[a];
    for (unsigned a = 4; a <= p.m; ++a)
      expect(counts[a] % 4 == 0, "letter " + std::to_string(a) + " count not divisible by 4");
  }
  return "100 samples (n=45, t in {1,2}): " + std::to_string(factors) +
         " circular kernel factors, all of length divisible by M; counts of letters >= 4 divisible by 4";
}

std::string beta_suite()
{
  const std::size_t K = 100000;
  const Word rec = beta_prefix(K);
  const Word tau = beta_prefix_by_morphism(K);
  expect(rec == tau, "recurrence and tau generators disagree");
  for (std::size_t i = 1; i <= K; ++i)
    expect(rec[i - 1] == oracle::beta_letter(i), "recurrence wrong at " + std::to_string(i));

  const std::size_t B = 10000;
  for (std::size_t k = 1; k <= B; ++k) {
    const auto f = factor_bracketed_by_two(k);
    std::size_t leftmost = 0;
    for (std::size_t s = 1; s + k - 1 <= K; ++s)
      if (rec[s - 1] == 2 && rec[s + k - 2] == 2) {
        leftmost = s;
        break;
      }
    expect(f.start == leftmost, "bracketed factor for k=" + std::to_string(k) + " is not leftmost");
    expect(f.factor.size() == k, "bracketed factor has wrong length");
  }

  const Word prefix = beta_prefix(B);
  const auto& b = prefix.letters();
  std::size_t pairs = 0;
  for (std::size_t s = 0; s < B; ++s) {
    for (std::size_t len = 1; len <= 60 && s + len <= B; ++len) {
      for (std::size_t q = 1; q <= len; ++q) {
        bool period = true;
        for (std::size_t i = s; i + q < s + len && period; ++i)
          period = b[i] == b[i + q];
        if (!period)
          continue;
        ++pairs;
        for (std::size_t pow3 = 1, k = 0; k <= 3; ++k, pow3 *= 3)
          if (len >= q + pow3)
            expect(q % pow3 == 0, "divisibility fails at start " + std::to_string(s + 1) + ", |u|=" +
                                      std::to_string(len) + ", q=" + std::to_string(q));
      }
    }
  }
  expect(!find_period_divisibility_violation(prefix, 60, 3), "library divisibility scan reports a violation");
  return "generators agree on 10^5 letters; leftmost bracketed factor for every k <= 10^4; " +
         std::to_string(pairs) + " (factor, period) pairs of the 10^4-prefix satisfy divisibility";
}

std::string pansiot_transport()
{
  std::mt19937_64 rng(99);
  std::size_t rotations = 0;
  for (unsigned n : {5u, 9u, 27u}) {
    for (int sample = 0; sample < 100; ++sample) {
      const Word u = random_kernel_word(rng, n);
      expect(phi(n, u).is_identity(), "generated word not in the kernel");
      const Word g = gamma(n, u);
      for (std::size_t j = 0; j < u.size(); ++j) {
        const auto tr = rotation_rename(n, u, j);
        const Word rotated = rotate(u, j);
        expect(tr.rotated_gamma == gamma(n, rotated), "rotated gamma mismatch");
        expect(tr.renaming == phi(n, std::span<const Letter>(u.letters()).first(j)), "renaming is not phi(u_1)");
        for (std::size_t i = 0; i < u.size(); ++i)
          expect(tr.renaming.image(g[(i + j) % u.size()]) == tr.rotated_gamma[i],
                 "b_i != a_i phi(u_1) for n=" + std::to_string(n));
        ++rotations;
      }
    }
  }
  return "100 random kernel words for each n in {5,9,27}: identity holds at all " + std::to_string(rotations) +
         " rotations";
}

// Least rotation of w as a base-4 code, used to share the circular oracle
// between conjugates.
std::uint64_t least_rotation_code(const oracle::Letters& w)
{
  std::uint64_t best = ~0ull;
  for (std::size_t r = 0; r < w.size(); ++r) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      code = code * 4 + static_cast<std::uint64_t>(w[(r + i) % w.size()]);
    best = std::min(best, code);
  }
  return best;
}

std::string oracle_equivalence()
{
  std::size_t free_words = 0;
  const Rational thresholds[] = {Rational(3, 2), Rational(2), Rational(5, 2)};
  oracle::for_each_canonical_word(3, 12, [&](const oracle::Letters& w) {
    ++free_words;
    const Word word = to_word(w, Alphabet::zero_based(3));
    for (bool circular : {false, true}) {
      const auto expected = oracle::max_exponent(w, circular);
      const auto got = circular ? circular_max_exponent(CircularWord(word)) : max_exponent_factor(word);
      expect(got.exponent == Rational(expected.exponent.num, expected.exponent.den) &&
                 got.start == expected.start && got.period == expected.period && got.length == expected.length,
             "max exponent mismatch on " + oracle::to_string(w));
      for (const Rational& r : thresholds)
        for (bool strict : {false, true}) {
          const auto verdict = circular ? is_circular_r_free(CircularWord(word), r, strict) : is_r_free(word, r, strict);
          expect(verdict.free == oracle::is_free(w, {r.num(), r.den()}, strict, circular),
                 "freeness mismatch on " + oracle::to_string(w));
        }
    }
  });

  // Letter renaming: both the exponent scan and the count criterion are
  // invariant, which is what lets one word per renaming class stand for all.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20000; ++trial) {
    oracle::Letters w(1 + rng() % 14);
    for (int& a : w)
      a = static_cast<int>(rng() % 4);
    int perm[4] = {0, 1, 2, 3};
    std::shuffle(perm, perm + 4, rng);
    oracle::Letters renamed(w);
    for (int& a : renamed)
      a = perm[a];
    const auto p27 = carpi_parameters(27);
    for (bool circular : {false, true}) {
      oracle::Letters a(w), b(renamed);
      for (int& x : a)
        ++x;
      for (int& x : b)
        ++x;
      expect(find_psi_kernel_repetition(p27, to_word(a, Alphabet::numbered(4)), circular).has_value() ==
                 find_psi_kernel_repetition(p27, to_word(b, Alphabet::numbered(4)), circular).has_value(),
             "psi detection not invariant under renaming");
      expect(circular_max_exponent(CircularWord(to_word(w, Alphabet::zero_based(4)))).exponent ==
                 circular_max_exponent(CircularWord(to_word(renamed, Alphabet::zero_based(4)))).exponent,
             "exponent not invariant under renaming");
    }
  }

  // Order-n kernel repetitions over all binary words.
  std::size_t binary_words = 0;
  for (int n : {3, 4, 5})
    for (std::size_t len = 1; len <= 12; ++len)
      oracle::for_each_word(2, len, [&](const oracle::Letters& u) {
        ++binary_words;
        for (bool circular : {false, true})
          expect(find_kernel_repetition(static_cast<unsigned>(n), to_word(u, Alphabet::binary()), circular)
                         .has_value() == oracle::has_order_n_kernel_repetition(n, u, circular),
                 "order-n kernel mismatch on " + oracle::to_string(u));
      });

  // psi-kernel repetitions: every word of length <= 14 over A_4 (one per
  // renaming class). The linear oracle is built up along the DFS: a word
  // has a repetition iff its prefix does or some suffix does.
  std::size_t psi_words = 0;
  for (unsigned n : {27u, 5u}) {
    const std::size_t max_len = n == 27 ? 14 : 11;
    CarpiParameters params = n == 27 ? carpi_parameters(27) : CarpiParameters{n, 4, n / 2, 1};
    const auto bound = oracle::psi_bound(static_cast<int>(n));
    std::unordered_map<std::uint64_t, bool> circular_cache;
    oracle::Letters w, suffix;
    std::vector<Letter> letters;
    auto visit = [&](auto&& self, int used, bool prefix_hit) -> void {
      for (int a = 0; a <= used && a < 4; ++a) {
        w.push_back(a);
        letters.push_back(static_cast<Letter>(a + 1));
        ++psi_words;

        bool hit = prefix_hit;
        for (std::size_t s = w.size(); s-- > 0 && !hit;) {
          suffix.assign(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
          hit = oracle::factor_is_kernel_repetition(suffix, oracle::counts_divisible_by_four, bound);
        }
        const Word word(Alphabet::numbered(4), letters);
        expect(find_psi_kernel_repetition(params, word, false).has_value() == hit,
               "linear psi mismatch on " + oracle::to_string(w));

        const std::uint64_t key = least_rotation_code(w) * 16 + w.size();
        auto it = circular_cache.find(key);
        if (it == circular_cache.end())
          it = circular_cache
                   .emplace(key, oracle::has_kernel_repetition(w, true, oracle::counts_divisible_by_four, bound))
                   .first;
        expect(find_psi_kernel_repetition(params, word, true).has_value() == it->second,
               "circular psi mismatch on " + oracle::to_string(w));

        if (w.size() < max_len)
          self(self, std::max(used, a + 1), hit);
        w.pop_back();
        letters.pop_back();
      }
    };
    visit(visit, 0, false);
  }

  return std::to_string(free_words) + " ternary words (len <= 12), " + std::to_string(binary_words) +
         " binary words (order-n kernel), " + std::to_string(psi_words) +
         " psi words (len <= 14, m = 4) match the brute-force oracles";
}

std::string micro_facts()
{
  const auto free_verdict = is_circular_r_free(CircularWord(Word::parse("012021")), Rational(2), false);
  expect(free_verdict.free, "<012021> is not 2-free");
  const CircularWord c(Word::parse("0120"));
  const auto r = circular_max_exponent(c);
  expect(r.exponent == Rational(2), "<0120> max exponent is not 2");
  const auto v = is_circular_r_free(c, Rational(2), false);
  expect(!v.free && v.witness, "<0120> reported 2-free");
  const Word& rep = c.representative();
  std::string factor;
  for (std::size_t k = 0; k < v.witness->length; ++k)
    factor += static_cast<char>('0' + rep[(v.witness->start + k) % rep.size()]);
  expect(factor == "00", "<0120> witness is " + factor);
  return "<012021> is 2-free; <0120> has witness \"00\" of exponent 2";
}

std::string search_soundness()
{
  SearchConfig config;
  config.alphabet_size = 3;
  config.threshold = Rational(2);
  config.circular = true;
  const auto one = search_all_lengths(config, 3, 12);
  config.workers = 8;
  const auto eight = search_all_lengths(config, 3, 12);
  expect(one.size() == 10 && eight.size() == 10, "wrong table size");

  std::string table;
  for (std::size_t i = 0; i < one.size(); ++i) {
    const std::size_t L = 3 + i;
    expect(to_text(one[i]) == to_text(eight[i]), "1 vs 8 workers differ at L=" + std::to_string(L));
    const auto expected = oracle::least_free_word(3, L, {2, 1}, false, true);
    const bool sat = one[i].kind == CertificateKind::search_witness;
    expect(sat == expected.has_value(), "SAT/UNSAT mismatch at L=" + std::to_string(L));
    if (sat)
      expect(one[i].word == oracle::to_string(*expected), "witness is not the least at L=" + std::to_string(L));
    expect(certify(one[i]).verdict == Verdict::valid, "certificate not re-verified at L=" + std::to_string(L));
    table += sat ? "S" : "U";
  }

  config.alphabet_size = 2;
  config.workers = 1;
  const auto refutation = search_witness(config, 4);
  expect(refutation.kind == CertificateKind::search_refutation, "binary L=4 not refuted");
  std::size_t checked = 0;
  oracle::for_each_word(2, 4, [&](const oracle::Letters& w) {
    ++checked;
    expect(!oracle::is_free(w, {2, 1}, false, true), "binary word " + oracle::to_string(w) + " is circularly 2-free");
  });
  expect(checked == 16, "did not enumerate 16 words");
  expect(certify(refutation).verdict == Verdict::valid, "refutation not re-verified");
  return "n=3 r=2 circular L=3..12 " + table + " matches enumeration, identical at 1 and 8 workers; binary L=4 "
         "refutation re-verified over 16 words";
}

} // namespace

int main()
{
  struct Criterion {
    const char* id;
    const char* name;
    std::function<std::string()> body;
  };
  const Criterion criteria[] = {
      {"AC1", "construction certification", construction_certification},
      {"AC2", "negative control", negative_control},
      {"AC3", "Lambda_t lemma suite", lambda_lemmas},
      {"AC4", "beta suite", beta_suite},
      {"AC5", "Pansiot rotation transport", pansiot_transport},
      {"AC6", "oracle equivalence", oracle_equivalence},
      {"AC7", "circular micro-facts", micro_facts},
      {"AC8", "search soundness and determinism", search_soundness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto begin = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    std::printf("%s %s %s: %s (%.1f s)\n", status.c_str(), c.id, c.name, detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
