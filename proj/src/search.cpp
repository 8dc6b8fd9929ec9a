#include "circrt/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "circrt/core_words.hpp"

namespace circrt {

namespace {

constexpr std::size_t kShardDepth = 6;

enum class Outcome { found, exhausted, over_budget };

// Word under construction plus, for every depth k and period p, the number
// of trailing positions j <= k with w[j] == w[j - p]. The longest suffix
// with period p then has length run + p.
class Extender {
public:
  Extender(const SearchConfig& config, std::size_t length)
      : n_(config.alphabet_size), length_(length),
        num_(static_cast<std::uint64_t>(config.threshold.num())),
        den_(static_cast<std::uint64_t>(config.threshold.den())), strict_(config.strict),
        runs_(length * (length + 1), 0)
  {
    word_.reserve(length);
    highest_.reserve(length);
  }

  std::size_t depth() const { return word_.size(); }
  const std::vector<Letter>& word() const { return word_; }

  /// Largest letter allowed next under the canonical-form rule.
  unsigned letter_limit() const
  {
    const unsigned next_new = word_.empty() ? 0 : highest_.back() + 1u;
    return std::min(next_new, n_ - 1);
  }

  bool push(Letter a)
  {
    const std::size_t k = word_.size();
    std::uint32_t* row = &runs_[k * (length_ + 1)];
    const std::uint32_t* prev = k ? &runs_[(k - 1) * (length_ + 1)] : nullptr;
    for (std::size_t p = 1; p <= k; ++p) {
      if (a != word_[k - p]) {
        row[p] = 0;
        continue;
      }
      const std::uint32_t run = (p <= k - 1 ? prev[p] : 0) + 1;
      row[p] = run;
      const std::uint64_t lhs = (run + p) * den_;
      const std::uint64_t rhs = num_ * p;
      if (strict_ ? lhs > rhs : lhs >= rhs)
        return false;
    }
    word_.push_back(a);
    highest_.push_back(std::max<Letter>(a, k ? highest_.back() : Letter{0}));
    return true;
  }

  void pop()
  {
    word_.pop_back();
    highest_.pop_back();
  }

private:
  unsigned n_;
  std::size_t length_;
  std::uint64_t num_, den_;
  bool strict_;
  std::vector<std::uint32_t> runs_;
  std::vector<Letter> word_;
  std::vector<Letter> highest_;
};

class Searcher {
public:
  Searcher(const SearchConfig& config, std::size_t length, std::size_t stop_depth, std::uint64_t budget)
      : stop_depth_(stop_depth), budget_(budget), ext_(config, length)
  {}

  Extender& extender() { return ext_; }
  std::uint64_t nodes() const { return nodes_; }

  /// Explores below the current word; `on_leaf` is called on every word of
  /// depth stop_depth and returns true to stop.
  template <class Leaf>
  Outcome run(Leaf&& on_leaf)
  {
    if (ext_.depth() == stop_depth_)
      return on_leaf(ext_.word()) ? Outcome::found : Outcome::exhausted;
    const unsigned limit = ext_.letter_limit();
    for (unsigned a = 0; a <= limit; ++a) {
      ++nodes_;
      if (budget_ && nodes_ > budget_)
        return Outcome::over_budget;
      if (!ext_.push(static_cast<Letter>(a)))
        continue;
      const Outcome r = run(on_leaf);
      ext_.pop();
      if (r != Outcome::exhausted)
        return r;
    }
    return Outcome::exhausted;
  }

private:
  std::size_t stop_depth_;
  std::uint64_t budget_;
  Extender ext_;
  std::uint64_t nodes_ = 0;
};

struct ShardResult {
  Outcome outcome = Outcome::exhausted;
  std::uint64_t nodes = 0;
  std::vector<Letter> witness;
};

bool accept_complete(const SearchConfig& config, const std::vector<Letter>& word)
{
  if (!config.circular || word.empty())
    return true;
  const CircularWord cw(Word(Alphabet::zero_based(config.alphabet_size), word));
  return is_circular_r_free(cw, config.threshold, config.strict).free;
}

void validate(const SearchConfig& config, std::size_t length)
{
  if (config.alphabet_size < 1)
    throw std::invalid_argument("search needs a nonempty alphabet");
  if (config.threshold <= Rational(1))
    throw std::invalid_argument("threshold must exceed 1");
  if (length < 1)
    throw std::invalid_argument("search lengths must be at least 1");
  if (length > std::numeric_limits<std::uint32_t>::max() / 2)
    throw std::invalid_argument("search length too large");
}

Certificate base_certificate(const SearchConfig& config, std::size_t length)
{
  Certificate c;
  c.kind = CertificateKind::search_witness;
  c.alphabet_size = config.alphabet_size;
  c.length = length;
  c.threshold = config.threshold;
  c.strict = config.strict;
  c.circular = config.circular;
  return c;
}

} // namespace

Certificate search_witness(const SearchConfig& config, std::size_t length)
{
  validate(config, length);
  Certificate cert = base_certificate(config, length);
  const std::size_t shard_depth = std::min(length, kShardDepth);

  // Surviving canonical prefixes of depth shard_depth, in lexicographic order.
  std::vector<std::vector<Letter>> prefixes;
  Searcher head(config, length, shard_depth, config.node_budget);
  const Outcome head_outcome = head.run([&](const std::vector<Letter>& w) {
    prefixes.push_back(w);
    return false;
  });
  std::uint64_t total = head.nodes();

  if (head_outcome == Outcome::over_budget) {
    cert.status = Status::budget_exhausted;
    cert.nodes = total;
    return cert;
  }

  // 0 would mean unlimited; an exhausted allowance still has to stop shards.
  const std::uint64_t shard_budget =
      config.node_budget ? std::max<std::uint64_t>(1, config.node_budget - total) : 0;
  std::vector<ShardResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

  auto work = [&] {
    while (true) {
      const std::size_t s = next.fetch_add(1);
      if (s >= prefixes.size() || s > first_found.load())
        return;
      Searcher searcher(config, length, length, shard_budget);
      for (Letter a : prefixes[s])
        searcher.extender().push(a);
      ShardResult& r = results[s];
      r.outcome = searcher.run([&](const std::vector<Letter>& w) {
        if (!accept_complete(config, w))
          return false;
        r.witness = w;
        return true;
      });
      r.nodes = searcher.nodes();
      if (r.outcome == Outcome::found) {
        std::size_t cur = first_found.load();
        while (s < cur && !first_found.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.workers,
                                                           static_cast<unsigned>(prefixes.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i)
      pool.emplace_back(work);
  }

  for (const ShardResult& r : results) {
    total += r.nodes;
    if (r.outcome == Outcome::over_budget || (config.node_budget && total > config.node_budget)) {
      cert.status = Status::budget_exhausted;
      cert.nodes = total;
      return cert;
    }
    if (r.outcome == Outcome::found) {
      const Word w(Alphabet::zero_based(config.alphabet_size), r.witness);
      const auto recheck = config.circular
                               ? is_circular_r_free(CircularWord(w), config.threshold, config.strict)
                               : is_r_free(w, config.threshold, config.strict);
      if (!recheck.free)
        throw std::logic_error("search produced a witness that fails the independent check");
      cert.status = Status::pass;
      cert.word = w.to_string();
      cert.nodes = total;
      const auto report = config.circular ? circular_max_exponent(CircularWord(w)) : max_exponent_factor(w);
      cert.checks.push_back({"independent-recheck", CheckOutcome::pass,
                             "maximal exponent " + report.exponent.to_string()});
      return cert;
    }
  }

  cert.kind = CertificateKind::search_refutation;
  cert.status = Status::pass;
  cert.nodes = total;
  cert.checks.push_back({"exhaustive-search", CheckOutcome::pass,
                         "canonical search tree exhausted without a witness"});
  return cert;
}

std::vector<Certificate> search_all_lengths(const SearchConfig& config, std::size_t first,
                                            std::size_t last)
{
  std::vector<Certificate> out;
  for (std::size_t length = first; length <= last && first <= last; ++length)
    out.push_back(search_witness(config, length));
  return out;
}

} // namespace circrt
