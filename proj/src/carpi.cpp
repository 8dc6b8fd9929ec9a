#include "circrt/carpi.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "circrt/detail/parallel.hpp"
#include "circrt/hash.hpp"
#include "circrt/pansiot.hpp"

namespace circrt {

CarpiParameters carpi_parameters(unsigned n)
{
  if (n < 27)
    throw std::invalid_argument("parameters undefined below Carpi range (n >= 27 required, got " +
                                std::to_string(n) + ")");
  CarpiParameters p;
  p.n = n;
  p.m = (n - 3) / 6;
  p.ell = n / 2;
  if (p.m - 2 > 31)
    throw std::overflow_error("M = 4^(m-2) does not fit in 64 bits");
  p.M = std::uint64_t{1} << (2 * (p.m - 2));
  return p;
}

bool in_psi_kernel(unsigned m, std::span<const Letter> v)
{
  std::vector<std::uint8_t> counts(m + 1, 0);
  for (Letter a : v) {
    if (a < 1 || a > m)
      throw std::invalid_argument("letter " + std::to_string(a) + " outside A_" + std::to_string(m));
    counts[a] = (counts[a] + 1) & 3;
  }
  return std::all_of(counts.begin(), counts.end(), [](std::uint8_t c) { return c == 0; });
}

bool meets_psi_bound(unsigned n, std::size_t length, std::size_t period)
{
  const auto nn = static_cast<std::int64_t>(n);
  return (nn - 1) * (static_cast<std::int64_t>(length) + 1) >=
         nn * static_cast<std::int64_t>(period) - 3;
}

std::optional<PsiKernelWitness> find_psi_kernel_repetition(const CarpiParameters& params,
                                                           std::span<const Letter> w, bool circular,
                                                           unsigned workers)
{
  const unsigned m = params.m;
  for (Letter a : w)
    if (a < 1 || a > m)
      throw std::invalid_argument("letter " + std::to_string(a) + " outside A_" + std::to_string(m));

  const std::size_t size = w.size();
  std::vector<Letter> text(w.begin(), w.end());
  if (circular)
    text.insert(text.end(), w.begin(), w.end());

  return detail::first_hit<PsiKernelWitness>(size, workers, [&](std::size_t start)
                                                 -> std::optional<PsiKernelWitness> {
    const Letter* s = text.data() + start;
    const std::size_t room = circular ? size : size - start;
    std::vector<std::uint8_t> counts(m + 1, 0);
    unsigned off_residue = 0; // letters whose count is not 0 (mod 4)
    for (std::size_t q = 1; q <= room; ++q) {
      auto& c = counts[s[q - 1]];
      if (c == 0)
        ++off_residue;
      c = (c + 1) & 3;
      if (c == 0)
        --off_residue;
      if (off_residue != 0)
        continue;
      std::size_t len = q;
      while (len < room && s[len] == s[len - q])
        ++len;
      if (meets_psi_bound(params.n, len, q))
        return PsiKernelWitness{start, len, q, start};
    }
    return std::nullopt;
  });
}

Letter lambda_letter(unsigned m, std::uint64_t i)
{
  if (i == 0)
    return static_cast<Letter>(m);
  unsigned a = 3;
  while (a < m && i % 4 == 0) {
    i /= 4;
    ++a;
  }
  return static_cast<Letter>(a);
}

LambdaVerdict lambda_membership(const CarpiParameters& params, std::uint64_t t,
                                std::span<const Letter> x)
{
  if (t < 1 || x.size() != params.M * t)
    throw std::invalid_argument("Lambda_t membership needs a word of length M t = " +
                                std::to_string(params.M * t) + ", got " +
                                std::to_string(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool ok = i % 4 == 0 ? x[i] == lambda_letter(params.m, i) : (x[i] >= 1 && x[i] <= 3);
    if (!ok)
      return {false, i};
  }
  return {};
}

MorphismTable load_fn_table(std::string_view source)
{
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos)
      end = source.size();
    auto line = source.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();

  if (lines.empty())
    throw TableError(TableError::Kind::header, "morphism table is empty");
  std::istringstream header{std::string(lines.front())};
  long long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 2 || m < 1 || n > 0xFFFF)
    throw TableError(TableError::Kind::header,
                     "morphism table header must be \"n m\" with n >= 2 and m >= 1");

  MorphismTable table;
  table.n = static_cast<unsigned>(n);
  table.m = static_cast<unsigned>(m);
  if (lines.size() - 1 != table.m)
    throw TableError(TableError::Kind::row_count,
                     "morphism table has " + std::to_string(lines.size() - 1) + " rows, expected " +
                         std::to_string(table.m));

  const std::uint64_t width = static_cast<std::uint64_t>(table.n - 1) * (table.n / 2 + 1);
  for (unsigned a = 1; a <= table.m; ++a) {
    const auto row = lines[a];
    if (row.size() != width)
      throw TableError(TableError::Kind::width, "image of letter " + std::to_string(a) +
                                                    " has width " + std::to_string(row.size()) +
                                                    ", expected " + std::to_string(width));
    std::vector<Letter> bits;
    bits.reserve(row.size());
    for (char c : row) {
      if (c != '0' && c != '1')
        throw TableError(TableError::Kind::non_binary,
                         "image of letter " + std::to_string(a) + " is not a 0/1 string");
      bits.push_back(static_cast<Letter>(c - '0'));
    }
    table.images.emplace_back(Alphabet::binary(), std::move(bits));
  }
  table.content_hash = sha256_hex(source);
  return table;
}

MorphismTable load_fn_table_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open morphism table " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_fn_table(buf.str());
}

Word apply_fn(const MorphismTable& table, std::span<const Letter> w)
{
  std::vector<Letter> out;
  out.reserve(w.size() * table.width());
  for (Letter a : w) {
    if (a < 1 || a > table.m)
      throw std::invalid_argument("letter " + std::to_string(a) + " outside A_" +
                                  std::to_string(table.m));
    const auto& img = table.images[a - 1].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(Alphabet::binary(), std::move(out));
}

Word pipeline(const CarpiParameters& params, const MorphismTable& table, std::span<const Letter> w)
{
  if (table.n != params.n || table.m != params.m)
    throw std::invalid_argument("morphism table (n=" + std::to_string(table.n) +
                                ", m=" + std::to_string(table.m) + ") does not match parameters (n=" +
                                std::to_string(params.n) + ", m=" + std::to_string(params.m) + ")");
  return gamma(params.n, apply_fn(table, w));
}

TableCrossCheck cross_check_kernel_criterion(const MorphismTable& table, std::size_t samples,
                                             std::uint64_t seed)
{
  const unsigned m = table.m;
  std::vector<Permutation> letter_image;
  letter_image.reserve(m);
  for (const auto& img : table.images)
    letter_image.push_back(phi(table.n, img));

  TableCrossCheck result;
  auto check = [&](std::vector<Letter> v) {
    auto p = Permutation::identity(table.n);
    for (Letter a : v)
      p = p.then(letter_image[a - 1]);
    ++result.words_checked;
    if (p.is_identity() != in_psi_kernel(m, v)) {
      result.consistent = false;
      result.counterexample = Word(Alphabet::numbered(m), std::move(v));
    }
    return result.consistent;
  };

  for (Letter a = 1; a <= m; ++a) {
    if (!check({a}) || !check({a, a, a, a}))
      return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> letter(1, m);
  std::uniform_int_distribution<std::size_t> length(1, 16);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Letter> v(length(rng));
    for (auto& a : v)
      a = static_cast<Letter>(letter(rng));
    if (s % 2 == 1) {
      std::vector<unsigned> counts(m + 1, 0);
      for (Letter a : v)
        ++counts[a];
      for (Letter a = 1; a <= m; ++a)
        for (unsigned r = counts[a] % 4; r != 0 && r < 4; ++r)
          v.push_back(a);
      std::shuffle(v.begin(), v.end(), rng);
    }
    if (!check(std::move(v)))
      return result;
  }
  return result;
}

} // namespace circrt
