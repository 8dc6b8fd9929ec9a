#include "circrt/certificate.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <json.hpp>

namespace circrt {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kFormat = "circrt-certificate/1";
constexpr std::string_view kTableFormat = "circrt-certificate-table/1";

template <class E, std::size_t N>
E from_name(const std::array<std::pair<E, std::string_view>, N>& names, const std::string& text,
            std::string_view what)
{
  for (const auto& [value, name] : names)
    if (name == text)
      return value;
  throw CertificateFormatError("unknown " + std::string(what) + " \"" + text + "\"");
}

constexpr std::array kKinds{
    std::pair{CertificateKind::construction, std::string_view{"construction"}},
    std::pair{CertificateKind::search_witness, std::string_view{"search-witness"}},
    std::pair{CertificateKind::search_refutation, std::string_view{"search-refutation"}},
};
constexpr std::array kStatuses{
    std::pair{Status::pass, std::string_view{"PASS"}},
    std::pair{Status::fail, std::string_view{"FAIL"}},
    std::pair{Status::conditional, std::string_view{"CONDITIONAL"}},
    std::pair{Status::budget_exhausted, std::string_view{"BUDGET-EXHAUSTED"}},
};
constexpr std::array kOutcomes{
    std::pair{CheckOutcome::pass, std::string_view{"PASS"}},
    std::pair{CheckOutcome::fail, std::string_view{"FAIL"}},
    std::pair{CheckOutcome::skipped, std::string_view{"SKIPPED"}},
    std::pair{CheckOutcome::conditional, std::string_view{"CONDITIONAL"}},
};

template <class E, std::size_t N>
std::string name_of(const std::array<std::pair<E, std::string_view>, N>& names, E value)
{
  for (const auto& [v, name] : names)
    if (v == value)
      return std::string(name);
  return "?";
}

json to_json(const Certificate& c)
{
  json j;
  j["format"] = kFormat;
  j["kind"] = to_string(c.kind);
  j["status"] = to_string(c.status);
  json params;
  params["n"] = c.alphabet_size;
  if (c.t)
    params["t"] = *c.t;
  params["length"] = c.length;
  params["threshold"] = c.threshold.to_string();
  params["strict"] = c.strict;
  params["circular"] = c.circular;
  j["parameters"] = std::move(params);
  j["word"] = c.word;
  json checks = json::array();
  for (const auto& check : c.checks)
    checks.push_back({{"name", check.name}, {"outcome", to_string(check.outcome)}, {"detail", check.detail}});
  j["checks"] = std::move(checks);
  if (c.witness) {
    json w;
    w["start"] = c.witness->start;
    w["length"] = c.witness->length;
    w["period"] = c.witness->period;
    if (c.witness->window_start)
      w["window_start"] = *c.witness->window_start;
    w["factor"] = c.witness->factor;
    j["witness"] = std::move(w);
  }
  if (c.table_hash)
    j["table_sha256"] = *c.table_hash;
  if (c.final_length)
    j["final_length"] = *c.final_length;
  if (c.final_word_hash)
    j["final_word_sha256"] = *c.final_word_hash;
  if (c.nodes)
    j["nodes"] = *c.nodes;
  return j;
}

const json& field(const json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key))
    throw CertificateFormatError(std::string("certificate is missing \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key)
{
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    throw CertificateFormatError(std::string("certificate field \"") + key + "\" has the wrong type");
  }
}

std::string hex_field(const json& j, const char* key)
{
  auto s = get_as<std::string>(j, key);
  if (s.size() != 64 || !std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
      }))
    throw CertificateFormatError(std::string("\"") + key + "\" is not a hex SHA-256 digest");
  return s;
}

Certificate from_json(const json& j)
{
  if (get_as<std::string>(j, "format") != kFormat)
    throw CertificateFormatError("unsupported certificate format");
  Certificate c;
  c.kind = from_name(kKinds, get_as<std::string>(j, "kind"), "kind");
  c.status = from_name(kStatuses, get_as<std::string>(j, "status"), "status");
  const json& params = field(j, "parameters");
  c.alphabet_size = get_as<unsigned>(params, "n");
  if (params.contains("t"))
    c.t = get_as<std::uint64_t>(params, "t");
  c.length = get_as<std::uint64_t>(params, "length");
  try {
    c.threshold = Rational::parse(get_as<std::string>(params, "threshold"));
  } catch (const std::invalid_argument& e) {
    throw CertificateFormatError(e.what());
  }
  c.strict = get_as<bool>(params, "strict");
  c.circular = get_as<bool>(params, "circular");
  c.word = get_as<std::string>(j, "word");
  const json& checks = field(j, "checks");
  if (!checks.is_array())
    throw CertificateFormatError("\"checks\" must be an array");
  for (const auto& check : checks) {
    c.checks.push_back({get_as<std::string>(check, "name"),
                        from_name(kOutcomes, get_as<std::string>(check, "outcome"), "outcome"),
                        get_as<std::string>(check, "detail")});
  }
  if (j.contains("witness")) {
    const json& w = j.at("witness");
    FactorWitness fw;
    fw.start = get_as<std::size_t>(w, "start");
    fw.length = get_as<std::size_t>(w, "length");
    fw.period = get_as<std::size_t>(w, "period");
    if (w.contains("window_start"))
      fw.window_start = get_as<std::size_t>(w, "window_start");
    fw.factor = get_as<std::string>(w, "factor");
    c.witness = std::move(fw);
  }
  if (j.contains("table_sha256"))
    c.table_hash = hex_field(j, "table_sha256");
  if (j.contains("final_length"))
    c.final_length = get_as<std::uint64_t>(j, "final_length");
  if (j.contains("final_word_sha256"))
    c.final_word_hash = hex_field(j, "final_word_sha256");
  if (j.contains("nodes"))
    c.nodes = get_as<std::uint64_t>(j, "nodes");
  return c;
}

} // namespace

const Check* Certificate::find_check(std::string_view name) const
{
  for (const auto& check : checks)
    if (check.name == name)
      return &check;
  return nullptr;
}

std::string to_string(CertificateKind kind) { return name_of(kKinds, kind); }
std::string to_string(Status status) { return name_of(kStatuses, status); }
std::string to_string(CheckOutcome outcome) { return name_of(kOutcomes, outcome); }

std::string to_text(const Certificate& cert)
{
  return to_json(cert).dump(2) + "\n";
}

std::string to_text(std::span<const Certificate> certs)
{
  json doc;
  doc["format"] = kTableFormat;
  json list = json::array();
  for (const auto& c : certs)
    list.push_back(to_json(c));
  doc["certificates"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<Certificate> parse_certificates(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  std::vector<Certificate> out;
  if (doc.is_object() && doc.contains("format") && doc["format"] == kTableFormat) {
    const json& list = field(doc, "certificates");
    if (!list.is_array())
      throw CertificateFormatError("\"certificates\" must be an array");
    for (const auto& item : list)
      out.push_back(from_json(item));
    return out;
  }
  out.push_back(from_json(doc));
  return out;
}

} // namespace circrt
