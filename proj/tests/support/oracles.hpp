#pragma once

// Brute-force reference implementations. Deliberately naive: they follow the
// textbook definitions and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

struct Frac {
  long long num = 0, den = 1;
};

inline int cmp(Frac a, Frac b)
{
  const long long l = a.num * b.den, r = b.num * a.den;
  return l < r ? -1 : l > r ? 1 : 0;
}

inline Letters from_string(const std::string& s)
{
  Letters out;
  for (char c : s)
    out.push_back(c - '0');
  return out;
}

inline std::string to_string(const Letters& w)
{
  std::string s;
  for (int a : w)
    s += static_cast<char>('0' + a);
  return s;
}

inline bool has_period(const Letters& w, std::size_t p)
{
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p])
      return false;
  return true;
}

inline std::size_t min_period(const Letters& w)
{
  for (std::size_t p = 1; p < w.size(); ++p)
    if (has_period(w, p))
      return p;
  return w.size();
}

// All factors of w (of the circular word when `circular`), as (start, factor).
template <class Visit>
void for_each_factor(const Letters& w, bool circular, Visit&& visit)
{
  const std::size_t n = w.size();
  Letters f;
  f.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t room = circular ? n : n - start;
    f.clear();
    for (std::size_t len = 1; len <= room; ++len) {
      f.push_back(w[(start + len - 1) % n]);
      visit(start, f);
    }
  }
}

struct Repetition {
  std::size_t start = 0, length = 0, period = 0;
  Frac exponent;
};

// Maximal exponent; ties broken by earliest start, then smallest period.
inline Repetition max_exponent(const Letters& w, bool circular)
{
  Repetition best;
  bool have = false;
  for_each_factor(w, circular, [&](std::size_t start, const Letters& f) {
    const std::size_t p = min_period(f);
    const Frac e{static_cast<long long>(f.size()), static_cast<long long>(p)};
    if (!have) {
      best = {start, f.size(), p, e};
      have = true;
      return;
    }
    const int c = cmp(e, best.exponent);
    if (c > 0 || (c == 0 && start == best.start && p < best.period))
      best = {start, f.size(), p, e};
  });
  return best;
}

inline bool violates(Frac e, Frac r, bool strict)
{
  return strict ? cmp(e, r) > 0 : cmp(e, r) >= 0;
}

inline bool is_free(const Letters& w, Frac r, bool strict, bool circular)
{
  bool ok = true;
  for_each_factor(w, circular, [&](std::size_t, const Letters& f) {
    for (std::size_t p = 1; p <= f.size() && ok; ++p)
      if (has_period(f, p) && violates(Frac{static_cast<long long>(f.size()), static_cast<long long>(p)}, r, strict))
        ok = false;
  });
  return ok;
}

// Every word of length len over {0..n-1}, in lexicographic order.
template <class Visit>
void for_each_word(int n, std::size_t len, Visit&& visit)
{
  Letters w(len, 0);
  while (true) {
    visit(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == n - 1)
      w[--i] = 0;
    if (i == 0)
      return;
    ++w[i - 1];
  }
}

// Words of length 1..max_len over {0..k-1} whose letters first appear in
// increasing order (one per renaming class), in depth-first order.
template <class Visit>
void for_each_canonical_word(int k, std::size_t max_len, Visit&& visit)
{
  Letters w;
  auto extend = [&](auto&& self, int used) -> void {
    for (int a = 0; a <= used && a < k; ++a) {
      w.push_back(a);
      visit(static_cast<const Letters&>(w));
      if (w.size() < max_len)
        self(self, std::max(used, a + 1));
      w.pop_back();
    }
  };
  extend(extend, 0);
}

inline std::optional<Letters> least_free_word(int n, std::size_t len, Frac r, bool strict, bool circular)
{
  std::optional<Letters> found;
  for_each_word(n, len, [&](const Letters& w) {
    if (!found && is_free(w, r, strict, circular))
      found = w;
  });
  return found;
}

// Permutations on {1..n} as image tables (index 0 unused).
using Perm = std::vector<int>;

inline Perm identity(int n)
{
  Perm p(n + 1);
  for (int x = 0; x <= n; ++x)
    p[x] = x;
  return p;
}

// The cycle (1 2 ... len) on {1..n}.
inline Perm cycle(int n, int len)
{
  Perm p = identity(n);
  for (int x = 1; x <= len; ++x)
    p[x] = x == len ? 1 : x + 1;
  return p;
}

// Apply `first`, then `second`.
inline Perm compose(const Perm& first, const Perm& second)
{
  Perm out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x)
    out[x] = second[first[x]];
  return out;
}

inline Perm phi(int n, const Letters& bits)
{
  Perm p = identity(n);
  for (int b : bits)
    p = compose(p, b == 0 ? cycle(n, n - 1) : cycle(n, n));
  return p;
}

inline bool is_identity(const Perm& p)
{
  return p == identity(static_cast<int>(p.size()) - 1);
}

inline Letters gamma(int n, const Letters& bits)
{
  Letters out;
  for (std::size_t i = 1; i <= bits.size(); ++i) {
    const Perm p = phi(n, Letters(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i)));
    for (int x = 1; x <= n; ++x)
      if (p[x] == 1)
        out.push_back(x);
  }
  return out;
}

inline bool has_short_stabilizing(int n, const Letters& bits, bool circular)
{
  bool found = false;
  for_each_factor(bits, circular, [&](std::size_t, const Letters& v) {
    const Perm p = phi(n, v);
    for (int k = 1; k <= n - 1 && !found; ++k) {
      bool fixes = true;
      for (int x = 1; x <= k; ++x)
        fixes = fixes && p[x] == x;
      if (fixes && static_cast<long long>(v.size()) < static_cast<long long>(k) * (n - 1))
        found = true;
    }
  });
  return found;
}

inline bool counts_divisible_by_four(const int* v, std::size_t len)
{
  int counts[64] = {};
  for (std::size_t i = 0; i < len; ++i)
    ++counts[v[i]];
  for (int c : counts)
    if (c % 4 != 0)
      return false;
  return true;
}

// Some period p of v with a length-p window accepted by `in_kernel` and
// `bound(|v|, p)`. Every period and every window is tried.
template <class InKernel, class Bound>
bool factor_is_kernel_repetition(const Letters& v, InKernel&& in_kernel, Bound&& bound)
{
  for (std::size_t p = 1; p <= v.size(); ++p) {
    if (!has_period(v, p) || !bound(static_cast<long long>(v.size()), static_cast<long long>(p)))
      continue;
    for (std::size_t i = 0; i + p <= v.size(); ++i)
      if (in_kernel(v.data() + i, p))
        return true;
  }
  return false;
}

template <class InKernel, class Bound>
bool has_kernel_repetition(const Letters& w, bool circular, InKernel&& in_kernel, Bound&& bound)
{
  bool found = false;
  for_each_factor(w, circular, [&](std::size_t, const Letters& v) {
    found = found || factor_is_kernel_repetition(v, in_kernel, bound);
  });
  return found;
}

inline bool phi_identity(int n, const int* v, std::size_t len)
{
  return is_identity(phi(n, Letters(v, v + len)));
}

inline auto order_n_bound(int n)
{
  return [n](long long len, long long p) { return (n - 1) * len > n * p - (n - 1) * (n - 1); };
}

inline auto psi_bound(int n)
{
  return [n](long long len, long long q) { return (n - 1) * (len + 1) >= n * q - 3; };
}

inline bool has_order_n_kernel_repetition(int n, const Letters& bits, bool circular)
{
  return has_kernel_repetition(
      bits, circular, [n](const int* v, std::size_t len) { return phi_identity(n, v, len); }, order_n_bound(n));
}

inline bool has_psi_kernel_repetition(int n, const Letters& w, bool circular)
{
  return has_kernel_repetition(w, circular, counts_divisible_by_four, psi_bound(n));
}

// b_i by the defining recurrence, 1-based.
inline int beta_letter(std::uint64_t i)
{
  while (i % 3 == 0)
    i /= 3;
  return i % 3 == 1 ? 1 : 2;
}

} // namespace oracle
