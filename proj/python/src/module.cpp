#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circrt/beta.hpp"
#include "circrt/carpi.hpp"
#include "circrt/certificate.hpp"
#include "circrt/certify.hpp"
#include "circrt/construction.hpp"
#include "circrt/core_words.hpp"
#include "circrt/pansiot.hpp"
#include "circrt/search.hpp"

namespace py = pybind11;
using namespace circrt;

namespace {

py::dict report_dict(const ExponentReport& r, std::span<const Letter> w, bool dotted)
{
  std::vector<Letter> f;
  for (std::size_t k = 0; k < r.length; ++k)
    f.push_back(w[(r.start + k) % w.size()]);
  py::dict d;
  d["start"] = r.start;
  d["length"] = r.length;
  d["period"] = r.period;
  d["exponent"] = r.exponent.to_string();
  d["factor"] = format_letters(f, dotted);
  return d;
}

py::object freeness(const std::string& text, const std::string& r, bool strict, bool circular)
{
  const Word w = Word::parse(text);
  const Rational threshold = Rational::parse(r);
  const auto verdict =
      circular ? is_circular_r_free(CircularWord(w), threshold, strict) : is_r_free(w, threshold, strict);
  if (verdict.free)
    return py::none();
  return report_dict(*verdict.witness, w, w.alphabet().dotted());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Circular repetition-threshold toolkit: exact exponents, Pansiot/Carpi encodings, "
            "construction certificates and backtracking search.";

  py::register_exception<CertificateFormatError>(m, "CertificateFormatError", PyExc_ValueError);

  m.def(
      "exponent",
      [](const std::string& text) {
        const auto r = exponent_report(Word::parse(text));
        return py::make_tuple(r.period, r.exponent.to_string());
      },
      py::arg("word"), "Minimal period and exponent (as \"p/q\") of a word.");

  m.def(
      "max_exponent_factor",
      [](const std::string& text, bool circular) {
        const Word w = Word::parse(text);
        const auto r = circular ? circular_max_exponent(CircularWord(w)) : max_exponent_factor(w);
        return report_dict(r, w, w.alphabet().dotted());
      },
      py::arg("word"), py::arg("circular") = false);

  m.def("find_repetition", &freeness, py::arg("word"), py::arg("r"), py::arg("strict") = false,
        py::arg("circular") = false,
        "Witness factor violating r-freeness, or None when the word is r-free.");

  m.def(
      "is_free",
      [](const std::string& text, const std::string& r, bool strict, bool circular) {
        return freeness(text, r, strict, circular).is_none();
      },
      py::arg("word"), py::arg("r"), py::arg("strict") = false, py::arg("circular") = false);

  m.def(
      "phi",
      [](unsigned n, const std::string& bits) {
        const auto p = circrt::phi(n, Word::parse(bits, Alphabet::binary()));
        std::vector<Letter> images;
        for (Letter x = 1; x <= n; ++x)
          images.push_back(p.image(x));
        return images;
      },
      py::arg("n"), py::arg("bits"), "Images of 1..n under the permutation of a binary word.");

  m.def(
      "gamma",
      [](unsigned n, const std::string& bits) {
        return circrt::gamma(n, Word::parse(bits, Alphabet::binary())).to_string();
      },
      py::arg("n"), py::arg("bits"));

  m.def(
      "beta_prefix", [](std::size_t k) { return circrt::beta_prefix(k).to_string(); }, py::arg("k"));

  m.def(
      "bracketed_factor",
      [](std::size_t k) {
        const auto f = factor_bracketed_by_two(k);
        return py::make_tuple(f.start, f.factor.to_string());
      },
      py::arg("k"), "Leftmost 1-based start and factor of length k bracketed by 2s.");

  m.def(
      "carpi_parameters",
      [](unsigned n) {
        const auto p = circrt::carpi_parameters(n);
        py::dict d;
        d["n"] = p.n;
        d["m"] = p.m;
        d["ell"] = p.ell;
        d["M"] = p.M;
        return d;
      },
      py::arg("n"));

  m.def(
      "build_w", [](unsigned n, std::uint64_t t) { return circrt::build_w(n, t).w.to_string(); },
      py::arg("n"), py::arg("t"));

  m.def(
      "verify_construction",
      [](unsigned n, std::uint64_t t, std::optional<std::string> word, unsigned workers) {
        py::gil_scoped_release release;
        const Word w = word ? Word::parse(*word, Alphabet::numbered(carpi_parameters(n).m))
                            : circrt::build_w(n, t).w;
        return to_text(verify_construction_word(n, t, w, workers));
      },
      py::arg("n"), py::arg("t"), py::arg("word") = py::none(), py::arg("workers") = 1,
      "Certificate document for the built word, or for a caller-supplied word over A_m.");

  m.def(
      "search",
      [](unsigned n, const std::string& r, std::size_t length, bool strict, bool circular,
         unsigned workers, std::uint64_t budget) {
        SearchConfig config;
        config.alphabet_size = n;
        config.threshold = Rational::parse(r);
        config.strict = strict;
        config.circular = circular;
        config.workers = workers;
        config.node_budget = budget;
        py::gil_scoped_release release;
        return to_text(search_witness(config, length));
      },
      py::arg("n"), py::arg("r"), py::arg("length"), py::arg("strict") = false,
      py::arg("circular") = false, py::arg("workers") = 1, py::arg("budget") = 0,
      "Search certificate document for one length.");

  m.def(
      "certify",
      [](const std::string& text, unsigned workers) {
        const auto certs = parse_certificates(text);
        CertifyOptions options;
        options.workers = workers;
        CertifyResult result;
        {
          py::gil_scoped_release release;
          result = certify_all(certs, options);
        }
        return py::make_tuple(to_string(result.verdict), result.detail);
      },
      py::arg("text"), py::arg("workers") = 1, "(verdict, detail) for a certificate document.");
}
