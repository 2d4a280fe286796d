#pragma once

// Independent brute-force re-derivations used as test oracles. Nothing here
// calls into the library's construction or analysis code.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Triple = std::array<int, 3>;
using Rule = std::function<Triple(int, int, int)>;

inline int md(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct V {
  int i, j, k;
  bool operator==(const V&) const = default;
  bool operator<(const V& o) const { return std::tie(i, j, k) < std::tie(o.i, o.j, o.k); }
};

inline V step(V v, int d, int m) {
  if (d == 0) v.i = md(v.i + 1, m);
  if (d == 1) v.j = md(v.j + 1, m);
  if (d == 2) v.k = md(v.k + 1, m);
  return v;
}

inline int flat(V v, int m) { return (v.i * m + v.j) * m + v.k; }

inline V unflat(int idx, int m) { return {idx / (m * m), (idx / m) % m, idx % m}; }

/// Successor table of color c under `rule`.
inline std::vector<int> successor(const Rule& rule, int c, int m) {
  std::vector<int> out(static_cast<std::size_t>(m) * m * m);
  for (int idx = 0; idx < static_cast<int>(out.size()); ++idx) {
    const V v = unflat(idx, m);
    out[static_cast<std::size_t>(idx)] = flat(step(v, rule(v.i, v.j, v.k)[static_cast<std::size_t>(c)], m), m);
  }
  return out;
}

inline bool is_bijection(const std::vector<int>& f) {
  std::vector<char> hit(f.size(), 0);
  for (int w : f) {
    if (hit[static_cast<std::size_t>(w)]) return false;
    hit[static_cast<std::size_t>(w)] = 1;
  }
  return true;
}

/// Cycle lengths of a bijection, by marking.
inline std::vector<int> cycles(const std::vector<int>& f) {
  std::vector<char> seen(f.size(), 0);
  std::vector<int> out;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t v = s; !seen[v]; v = static_cast<std::size_t>(f[v])) {
      seen[v] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

/// Sign by counting inversions, O(n^2); fine for the small cases it serves.
inline int sign_by_inversions(const std::vector<int>& f) {
  long long inv = 0;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) inv += f[a] > f[b];
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// Sign via n - #cycles.
inline int sign_by_cycles(const std::vector<int>& f) {
  const auto c = cycles(f);
  return (static_cast<long long>(f.size()) - static_cast<long long>(c.size())) % 2 == 0 ? 1 : -1;
}

inline Triple canonical(int, int, int) { return {0, 1, 2}; }

/// The odd-m coloring written per color from its bump description.
inline Triple odd_rule(int i, int j, int k, int m) {
  const int s = md(i + j + k, m);
  int d0, d1, d2;
  if (s == 0 && k != 0) d0 = 1;
  else if (s == 1) d0 = 2;
  else d0 = 0;
  if (s == 0) d1 = 2;
  else if (s == 1 && k == 0) d1 = 0;
  else d1 = 1;
  if ((s == 0 || s == 1) && k == 0) d2 = 1;
  else if (s == 0 || s == 1) d2 = 0;
  else d2 = 2;
  return {d0, d1, d2};
}

/// variant: 0 actual, 1 primary, 2 deleted repair.
inline Triple route_e_rule(int i, int j, int k, int m, int variant = 0) {
  const int s = md(i + j + k, m);
  if (s == 1) return i == 0 ? Triple{1, 0, 2} : Triple{2, 0, 1};
  if (s == 2) return j == 0 ? Triple{2, 1, 0} : Triple{0, 1, 2};
  if (s != 0) return {0, 1, 2};
  const bool case2 = variant != 1 && m % 6 == 4;
  const int lo = case2 ? 2 : 1;
  auto is = [&](int a, int b, int c) { return i == a && j == b && k == c; };
  const bool in102 = is(0, 0, 0) || (j == 1 && i >= lo && i <= m - 3 && k == m - 1 - i) ||
                     is(m - 1, 2, m - 1);
  const bool in021 = is(0, 1, m - 1) || (k == 0 && i >= lo && i <= m - 3 && j == m - i) ||
                     is(m - 1, 0, 1);
  bool in210 = (i == 0 && j >= 2 && j <= m - 1 && k == m - j) || is(1, 0, m - 1);
  if (case2 && variant == 0) {
    in210 = in210 || (i == 1 && j >= 2 && j <= m - 2 && k == m - 1 - j) || is(2, 0, m - 2) ||
            is(2, m - 1, m - 1);
  }
  if (in102) return {1, 0, 2};
  if (in021) return {0, 2, 1};
  if (in210) return {2, 1, 0};
  if (case2) {
    if (is(1, 1, m - 2) || is(m - 2, 1, 1)) return {0, 1, 2};
    if (is(1, m - 1, 0) || is(m - 2, 2, 0)) return {2, 0, 1};
  } else {
    if (is(m - 2, 1, 1)) return {0, 1, 2};
    if (is(m - 2, 2, 0)) return {2, 0, 1};
  }
  return {1, 2, 0};
}

/// m-step image of (i, -i-k, k) under color c, as (i,k).
inline std::pair<int, int> return_ik(const Rule& rule, int c, int i, int k, int m) {
  V v{i, md(-i - k, m), k};
  for (int n = 0; n < m; ++n) v = step(v, rule(v.i, v.j, v.k)[static_cast<std::size_t>(c)], m);
  return {v.i, v.k};
}

/// First return to the transversal, in the same working frame as the
/// library: colors 0 and 1 use x = i + 2k (resp. i - k) with clock t = k;
/// color 2 uses (x,y) = (i, i+k).
struct LaneResult {
  int target = -1;
  int time = 0;
};

inline std::vector<LaneResult> first_return(const Rule& rule, int c, int m) {
  std::vector<LaneResult> out(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    // Transversal point in (i,k).
    int i = x, k = c == 2 ? md(-x, m) : 0;
    for (int n = 1; n <= m * m; ++n) {
      std::tie(i, k) = return_ik(rule, c, i, k, m);
      const bool on = c == 2 ? md(i + k, m) == 0 : k == 0;
      if (on) {
        int lane = 0;
        if (c == 0) lane = md(i + 2 * k, m);
        if (c == 1) lane = md(i - k, m);
        if (c == 2) lane = i;
        out[static_cast<std::size_t>(x)] = {lane, n};
        break;
      }
    }
  }
  return out;
}

/// Expands "a, a+d, ..., b" inclusive.
inline std::vector<int> run(int a, int b, int d) {
  std::vector<int> out;
  for (int x = a; d > 0 ? x <= b : x >= b; x += d) out.push_back(x);
  return out;
}

}  // namespace oracle
