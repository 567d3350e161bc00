#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library beyond Permutation construction, so they can judge it.

#include "perm_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using stacksort::Permutation;
using Seq = std::vector<int>;

inline Seq entries(const Permutation& x) { return Seq(x.begin(), x.end()); }

// Every k-subset of positions, via bitmask.
inline bool contains(const Seq& text, const Seq& pattern)
{
  const int n = static_cast<int>(text.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n)
    return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k)
      continue;
    Seq pick;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i))
        pick.push_back(text[static_cast<std::size_t>(i)]);
    }
    bool same = true;
    for (int a = 0; a < k && same; ++a) {
      for (int b = 0; b < k && same; ++b)
        same = (pick[a] < pick[b]) == (pattern[a] < pattern[b]);
    }
    if (same)
      return true;
  }
  return false;
}

// Bivincular containment; pos_adj / val_adj hold 1-based i meaning
// "positions i, i+1 adjacent" / "values i, i+1 consecutive".
inline bool contains_bivincular(const Seq& text, const Seq& pattern, const Seq& pos_adj, const Seq& val_adj)
{
  const int n = static_cast<int>(text.size());
  const int k = static_cast<int>(pattern.size());
  if (k > n)
    return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k)
      continue;
    Seq idx;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i))
        idx.push_back(i);
    }
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b)
        ok = (text[idx[a]] < text[idx[b]]) == (pattern[a] < pattern[b]);
    }
    for (const int i : pos_adj) {
      if (ok)
        ok = idx[i] == idx[i - 1] + 1;
    }
    for (const int v : val_adj) {
      if (!ok)
        break;
      int at_v = -1, at_v1 = -1;
      for (int a = 0; a < k; ++a) {
        if (pattern[a] == v)
          at_v = text[idx[a]];
        if (pattern[a] == v + 1)
          at_v1 = text[idx[a]];
      }
      ok = at_v1 == at_v + 1;
    }
    if (ok)
      return true;
  }
  return false;
}

inline bool contains_123_star(const Seq& x) { return contains_bivincular(x, {1, 2, 3}, {2}, {2}); }
inline bool contains_132_star(const Seq& x) { return contains_bivincular(x, {1, 3, 2}, {2}, {2}); }

// Right-greedy stack; before each push the whole stack (top first, with the
// new value on top) is rescanned for every pattern.
inline Seq stack_pass(const Seq& x, const std::vector<Seq>& patterns)
{
  Seq stack, out;
  for (const int v : x) {
    for (;;) {
      Seq view{v};
      view.insert(view.end(), stack.rbegin(), stack.rend());
      const bool bad = std::any_of(patterns.begin(), patterns.end(), [&](const Seq& p) { return contains(view, p); });
      if (!bad || stack.empty())
        break;
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  out.insert(out.end(), stack.rbegin(), stack.rend());
  return out;
}

inline Seq west(const Seq& x) { return stack_pass(x, {{2, 1}}); }

inline bool sortable(const Seq& x, const std::vector<Seq>& patterns)
{
  Seq y = west(stack_pass(x, patterns));
  return std::is_sorted(y.begin(), y.end());
}

inline std::vector<Seq> all_permutations(int n)
{
  Seq e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Seq> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

inline Seq digits(const std::string& s)
{
  Seq out;
  for (const char c : s)
    out.push_back(c - '0');
  return out;
}

inline std::uint64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// Lattice paths from (0,0) to (n,n) with steps E, N, diagonal D that never
// rise above the diagonal, counted by exhaustive step-by-step recursion.
inline std::uint64_t schroder_paths(int x, int y, int n)
{
  if (y > x || x > n || y > n)
    return 0;
  if (x == n && y == n)
    return 1;
  return schroder_paths(x + 1, y, n) + schroder_paths(x, y + 1, n) + schroder_paths(x + 1, y + 1, n);
}

// sum_k C(n, k) Catalan(k).
inline std::uint64_t binomial_catalan(int n)
{
  std::uint64_t s = 0;
  for (int k = 0; k <= n; ++k)
    s += binomial(n, k) * catalan(k);
  return s;
}

// All balanced u/d words of semilength n by filtering every binary word.
inline std::vector<std::string> dyck_words(int n)
{
  std::vector<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const bool up = !(mask & (1u << (2 * n - 1 - i)));
      w += up ? 'u' : 'd';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0)
      out.push_back(w);
  }
  return out;
}

} // namespace oracle
