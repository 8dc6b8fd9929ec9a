#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "circrt/beta.hpp"
#include "circrt/carpi.hpp"
#include "circrt/certificate.hpp"
#include "circrt/certify.hpp"
#include "circrt/construction.hpp"
#include "circrt/core_words.hpp"
#include "circrt/pansiot.hpp"
#include "circrt/search.hpp"

namespace circrt::cli {

namespace {

// Bad input discovered after flag parsing; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_workers()
{
  if (const char* env = std::getenv("CIRCRT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1)
        return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush())
    throw UsageError("cannot write " + path);
}

std::string trim(std::string s)
{
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

Word word_argument(const std::string& arg)
{
  const std::string text = arg.size() > 1 && arg[0] == '@' ? trim(read_file(arg.substr(1))) : arg;
  return Word::parse(text);
}

std::string describe(const ExponentReport& r, std::span<const Letter> w, bool dotted)
{
  std::vector<Letter> f;
  for (std::size_t k = 0; k < r.length; ++k)
    f.push_back(w[(r.start + k) % w.size()]);
  return "factor " + format_letters(f, dotted) + " (start " + std::to_string(r.start) + ", length " +
         std::to_string(r.length) + ", period " + std::to_string(r.period) + ", exponent " +
         r.exponent.to_string() + ")";
}

int cmd_exponent(const std::string& text, std::ostream& out)
{
  const Word w = Word::parse(text);
  const auto report = exponent_report(w);
  out << "period " << report.period << "\nexponent " << report.exponent << "\n";
  return holds;
}

int cmd_check(const std::string& r_text, bool strict, bool circular, const std::string& arg,
              std::ostream& out)
{
  const Rational r = Rational::parse(r_text);
  const Word w = word_argument(arg);
  if (circular && w.empty())
    throw UsageError("circular check needs a nonempty word");
  const auto verdict = circular ? is_circular_r_free(CircularWord(w), r, strict) : is_r_free(w, r, strict);
  const std::string claim = r.to_string() + (strict ? "+" : "") + "-free";
  if (verdict.free) {
    out << (circular ? "circular " : "") << "word is " << claim << "\n";
    return holds;
  }
  out << (circular ? "circular " : "") << "word is not " << claim << ": "
      << describe(*verdict.witness, w, w.alphabet().dotted()) << "\n";
  return fails;
}

int cmd_gamma(unsigned n, const std::string& bits, std::ostream& out)
{
  const Word u = Word::parse(bits, Alphabet::binary());
  out << gamma(n, u).to_string() << "\n";
  return holds;
}

int cmd_beta(std::optional<std::size_t> length, std::optional<std::size_t> bracket, std::ostream& out)
{
  if (length.has_value() == bracket.has_value())
    throw UsageError("beta needs exactly one of --length or --bracket");
  if (length) {
    out << beta_prefix(*length).to_string() << "\n";
    return holds;
  }
  const auto found = factor_bracketed_by_two(*bracket);
  out << "start " << found.start << "\nfactor " << found.factor.to_string() << "\n";
  return holds;
}

void print_checks(const Certificate& cert, std::ostream& out)
{
  for (const auto& check : cert.checks)
    out << "check " << check.name << ": " << to_string(check.outcome) << " (" << check.detail << ")\n";
  if (cert.witness)
    out << "witness: start " << cert.witness->start << ", length " << cert.witness->length
        << ", period " << cert.witness->period << "\n";
}

int cmd_construct(unsigned n, std::uint64_t t, const std::string& table_path,
                  std::uint64_t scan_budget, unsigned workers, const std::string& out_path,
                  const std::string& word_path, std::ostream& out)
{
  std::optional<MorphismTable> table;
  if (!table_path.empty())
    table = load_fn_table(read_file(table_path));

  PipelineOptions options;
  options.scan_budget = scan_budget;
  options.workers = workers;
  const auto result = full_pipeline(n, t, table ? &*table : nullptr, options);
  const Certificate& cert = result.certificate;
  const auto params = carpi_parameters(n);

  out << "n " << n << ", t " << t << ", m " << params.m << ", ell " << params.ell << ", M " << params.M
      << "\n|w| " << cert.length << "\nfinal length " << *cert.final_length << "\n";
  print_checks(cert, out);
  out << "status " << to_string(cert.status) << "\n";

  if (!out_path.empty())
    write_file(out_path, to_text(cert));
  if (!word_path.empty()) {
    if (!result.final_word)
      throw UsageError("--emit-word needs --fn-table");
    write_file(word_path, result.final_word->to_string() + "\n");
  }
  return cert.status == Status::fail ? fails : holds;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text)
{
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw UsageError("--lengths expects A..B");
  try {
    std::size_t used = 0;
    const auto a = std::stoull(text.substr(0, dots), &used);
    if (used != dots)
      throw UsageError("bad range");
    const std::string rest = text.substr(dots + 2);
    const auto b = std::stoull(rest, &used);
    if (used != rest.size())
      throw UsageError("bad range");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("malformed range \"" + text + "\"");
  }
}

int cmd_search(SearchConfig config, std::optional<std::size_t> length, const std::string& lengths,
               const std::string& out_path, std::ostream& out)
{
  if (length.has_value() == !lengths.empty())
    throw UsageError("search needs exactly one of --length or --lengths");
  std::vector<Certificate> certs;
  if (length) {
    certs.push_back(search_witness(config, *length));
  } else {
    const auto [first, last] = parse_range(lengths);
    certs = search_all_lengths(config, first, last);
  }

  bool any_exhausted = false, any_refuted = false;
  for (const auto& c : certs) {
    out << "L " << c.length << ": ";
    if (c.status == Status::budget_exhausted) {
      any_exhausted = true;
      out << "BUDGET-EXHAUSTED";
    } else if (c.kind == CertificateKind::search_refutation) {
      any_refuted = true;
      out << "UNSAT";
    } else {
      out << "SAT " << c.word;
    }
    out << " (nodes " << c.nodes.value_or(0) << ")\n";
  }

  if (!out_path.empty())
    write_file(out_path, length ? to_text(certs.front()) : to_text(certs));
  if (any_exhausted)
    return exhausted;
  return any_refuted ? fails : holds;
}

int cmd_certify(const std::string& path, unsigned workers, std::ostream& out)
{
  std::vector<Certificate> certs;
  try {
    certs = parse_certificates(read_file(path));
  } catch (const CertificateFormatError& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  CertifyOptions options;
  options.workers = workers;
  const auto result = certify_all(certs, options);
  out << to_string(result.verdict) << "\n" << result.detail << "\n";
  if (result.witness)
    out << "witness: " << result.witness->factor << " (start " << result.witness->start << ", period "
        << result.witness->period << ")\n";
  switch (result.verdict) {
  case Verdict::valid:
  case Verdict::trusted: return holds;
  case Verdict::invalid: return fails;
  case Verdict::inconclusive: return exhausted;
  }
  return fails;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Circular repetition-threshold toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string word_text, r_text = "", bits, table_path, out_path, word_path, lengths, cert_path;
  bool strict = false, circular = false;
  unsigned n = 0, workers = default_workers();
  std::uint64_t t = 0, scan_budget = PipelineOptions{}.scan_budget, budget = 0;
  std::optional<std::size_t> beta_length, beta_bracket, search_length;

  auto* exponent = app.add_subcommand("exponent", "Minimal period and exponent of a word");
  exponent->add_option("word", word_text, "Word (digits or dot-separated letters)")->required();

  auto* check = app.add_subcommand("check", "Check r-freeness of a word");
  check->add_option("--r", r_text, "Threshold P/Q")->required();
  check->add_flag("--strict", strict, "Forbid exponents > r instead of >= r");
  check->add_flag("--circular", circular, "Treat the word as circular");
  check->add_option("word", word_text, "Word, or @file")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Pansiot encoding of a binary word");
  gamma_cmd->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(2u, 65535u));
  gamma_cmd->add_option("bits", bits, "Binary word")->required();

  auto* beta_cmd = app.add_subcommand("beta", "Prefixes and bracketed factors of beta");
  auto* length_opt = beta_cmd->add_option("--length", beta_length, "Print the first K letters");
  beta_cmd->add_option("--bracket", beta_bracket, "Leftmost length-K factor bracketed by 2")
      ->excludes(length_opt)
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Build and certify the length-Mt word");
  construct->add_option("--n", n, "Alphabet size (>= 45)")->required();
  construct->add_option("--t", t, "Multiplier t (>= 1)")->required();
  construct->add_option("--fn-table", table_path, "Morphism table file");
  construct->add_option("--scan-budget", scan_budget, "Largest final word scanned directly");
  construct->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  construct->add_option("--out", out_path, "Write the certificate here");
  construct->add_option("--emit-word", word_path, "Write the final word here (needs --fn-table)");

  auto* search = app.add_subcommand("search", "Backtracking search for r-free words");
  search->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1u, 65535u));
  search->add_option("--r", r_text, "Threshold P/Q")->required();
  search->add_flag("--strict", strict, "Forbid exponents > r instead of >= r");
  search->add_flag("--circular", circular, "Search circular words");
  auto* single = search->add_option("--length", search_length, "Single length")->check(CLI::PositiveNumber);
  search->add_option("--lengths", lengths, "Range A..B")->excludes(single);
  search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "Node budget (0 = unlimited)");
  search->add_option("--out", out_path, "Write the certificate(s) here");

  auto* certify_cmd = app.add_subcommand("certify", "Re-verify a certificate file");
  certify_cmd->add_option("path", cert_path, "Certificate file")->required();
  certify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? holds : usage;
  }

  try {
    if (*exponent)
      return cmd_exponent(word_text, out);
    if (*check)
      return cmd_check(r_text, strict, circular, word_text, out);
    if (*gamma_cmd)
      return cmd_gamma(n, bits, out);
    if (*beta_cmd)
      return cmd_beta(beta_length, beta_bracket, out);
    if (*construct)
      return cmd_construct(n, t, table_path, scan_budget, workers, out_path, word_path, out);
    if (*search) {
      SearchConfig config;
      config.alphabet_size = n;
      config.threshold = Rational::parse(r_text);
      config.strict = strict;
      config.circular = circular;
      config.workers = workers;
      config.node_budget = budget;
      return cmd_search(config, search_length, lengths, out_path, out);
    }
    if (*certify_cmd)
      return cmd_certify(cert_path, workers, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const TableError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

} // namespace circrt::cli
