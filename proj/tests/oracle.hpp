#pragma once

// Brute-force references used to check the library's enumerators and series.
// Nothing here shares code with the search or pruning in src/.

#include <cstdint>
#include <functional>
#include <vector>

#include "yw/partition.hpp"

namespace oracle {

// Every weakly decreasing sequence of letters from `alphabet` (sorted
// decreasing by the part order) with values summing to m.
inline void sequences(int m, const std::vector<yw::Part>& alphabet, std::size_t start, yw::Partition& cur,
                      const std::function<void(const yw::Partition&)>& emit) {
  if (m == 0) {
    emit(cur);
    return;
  }
  for (std::size_t i = start; i < alphabet.size(); ++i) {
    if (alphabet[i].v > m) continue;
    cur.push_back(alphabet[i]);
    sequences(m - alphabet[i].v, alphabet, i, cur, emit);
    cur.pop_back();
  }
}

inline std::vector<yw::Partition> all_sequences(int m, bool with_bars) {
  std::vector<yw::Part> alpha;
  for (int v = m; v >= 1; --v) {
    alpha.push_back(yw::Part(v));
    if (with_bars) alpha.push_back(yw::barred(v));
  }
  std::vector<yw::Partition> out;
  yw::Partition cur;
  sequences(m, alpha, 0, cur, [&](const yw::Partition& p) { out.push_back(p); });
  return out;
}

inline std::vector<yw::Ordinary> ordinary_partitions(int m) {
  std::vector<yw::Ordinary> out;
  yw::Ordinary cur;
  std::function<void(int, int)> rec = [&](int rest, int mx) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

inline std::int64_t p_count(int k) { return static_cast<std::int64_t>(ordinary_partitions(k).size()); }

inline std::int64_t strict_count(int k, int avoid = 0) {
  std::int64_t n = 0;
  for (auto& p : ordinary_partitions(k)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i + 1 < p.size() && p[i] == p[i + 1]) ok = false;
      if (avoid && p[i] % avoid == 0) ok = false;
    }
    n += ok;
  }
  return n;
}

// Coefficients of prod (1+t^i)^{k(i)} by counting multisets directly.
inline std::vector<std::int64_t> product_coeffs(int M, const std::function<int(int)>& k) {
  std::vector<std::int64_t> out(M + 1, 0);
  // parts are pairs (i, copy) with copy < k(i); choose distinct pairs.
  std::function<void(int, int, int)> rec = [&](int rest, int i, int copy) {
    (void)copy;
    if (i == 0) {
      out[M - rest]++;
      return;
    }
    rec(rest, i - 1, 0);
    int kk = k(i);
    if (kk >= 1 && i <= rest) rec(rest - i, i - 1, 0);
    if (kk >= 2 && i <= rest) rec(rest - i, i - 1, 0);
    if (kk >= 2 && 2 * i <= rest) rec(rest - 2 * i, i - 1, 0);
  };
  rec(M, M, 0);
  return out;
}

}  // namespace oracle
