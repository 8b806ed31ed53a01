#include "yw/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "yw/error.hpp"
#include "yw/sets.hpp"

namespace yw {

namespace {

constexpr int kMaxRounds = 100000;

bool is_column(Part p, int U) { return !p.bar && p.v > 0 && p.v % U == 0; }
bool is_multiple(Part p, int U) { return p.v > 0 && p.v % U == 0; }

Part shift(Part p, int d) {
  if (p.v + d < 0) throw DomainError("part " + to_string(p) + " cannot be lowered by " + std::to_string(-d));
  return Part(p.v + d, p.bar);
}

int count_equal(const Partition& y, Part p) {
  return static_cast<int>(std::count(y.begin(), y.end(), p));
}

// Maximal runs of positive multiples of U whose values step by 0 or U.
std::vector<std::pair<std::size_t, std::size_t>> components(const Partition& y, int U) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < y.size()) {
    if (!is_multiple(y[i], U)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < y.size() && is_multiple(y[j + 1], U) &&
           (y[j].v == y[j + 1].v || y[j].v - y[j + 1].v == U))
      ++j;
    out.emplace_back(i, j);
    i = j + 1;
  }
  return out;
}

// Equal-value blocks inside [s, e]: (start, length).
std::vector<std::pair<std::size_t, std::size_t>> blocks(const Partition& y, std::size_t s, std::size_t e) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = s; i <= e; ++i) {
    if (!out.empty() && y[out.back().first].v == y[i].v)
      ++out.back().second;
    else
      out.emplace_back(i, 1);
  }
  return out;
}

// A component ending the partition at value U: its blocks alternate from a
// barred bottom instead of from the top.
bool tail_component(const Partition& y, std::size_t e, int U) { return e + 1 == y.size() && y[e].v == U; }

bool viol(Part a, Part b, const Config& c) {
  Part d = subtract(a, b), U(c.U);
  if (d > U) return true;
  return d == U && (congruent(a, c) || b.v == 0 || congruent(b, c));
}

// Largest 1-based position i such that the pair (y_i, y_{i+1}) (zero tail
// included) breaks AO1's difference rule; 0 if none.
std::size_t last_violation(const Partition& cur, const Config& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i <= cur.size(); ++i) {
    Part b = i < cur.size() ? cur[i] : Part(0);
    if (viol(cur[i - 1], b, c)) best = i;
  }
  return best;
}

bool in_target(const Partition& y, const Config& c) {
  return c.family == Family::D2 ? in_AO4(y, c) : in_AO2(y, c);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Partition add_rowwise(const Partition& rows, const Ordinary& nu, int U) {
  if (nu.size() > rows.size())
    throw DomainError("row-wise addition: " + std::to_string(nu.size()) + " increments for " +
                      std::to_string(rows.size()) + " rows");
  Partition out = rows;
  for (std::size_t i = 0; i < nu.size(); ++i) out[i] = shift(out[i], U * nu[i]);
  return out;
}

}  // namespace

Partition left_insert(int e, int j, const Partition& y) {
  if (j < 0 || e <= 0) throw InvalidArgument("left_insert: need e > 0 and j >= 0");
  std::size_t pos = y.size();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] < barred(e)) {
      pos = i;
      break;
    }
  bool bar = pos > 0 && y[pos - 1] == barred(e);
  Partition out(y.begin(), y.begin() + pos);
  out.insert(out.end(), j, Part(e, bar));
  out.insert(out.end(), y.begin() + pos, y.end());
  return out;
}

Partition right_insert(int kU, int j, const Partition& y) {
  if (j < 0 || kU <= 0) throw InvalidArgument("right_insert: need kU > 0 and j >= 0");
  std::size_t pos = y.size();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] < barred(kU)) {
      pos = i;
      break;
    }
  Partition out(y.begin(), y.begin() + pos);
  out.insert(out.end(), j, Part(kU));
  out.insert(out.end(), y.begin() + pos, y.end());
  return out;
}

Reduction algoA(const Partition& y, const Config& c) {
  require(in_Z(y, c), "algoA: input is not in Z");
  require(!in_AO1(y, c), "algoA: input already in AO1");
  const int U = c.U;
  Partition cur = y;
  for (int round = 0; !in_AO1(cur, c); ++round) {
    if (round > kMaxRounds) throw DomainError("algoA: no termination");
    std::size_t best_i = 0;
    int best_t = 0;
    for (std::size_t i = 1; i <= cur.size(); ++i) {
      Part a = cur[i - 1], b = i < cur.size() ? cur[i] : Part(0);
      int tt = 0;
      for (int t = 1; a.v - t * U >= b.v; ++t) {
        Part x(a.v - t * U, a.bar);
        if (x.v == 0 && a.bar) continue;  // a bar cannot vanish
        if (x < b) continue;
        Partition pair;
        for (Part p : {x, b})
          if (p.v > 0) pair.push_back(p);
        if (in_Z(pair, c)) tt = t;
      }
      if (tt) best_i = i, best_t = tt;
    }
    require(best_i > 0, "algoA: no reducible position in " + to_string(cur));
    for (std::size_t k = 0; k < best_i; ++k) cur[k] = shift(cur[k], -best_t * U);
    std::erase_if(cur, [](Part p) { return p.v == 0; });
  }
  Ordinary lam;
  for (std::size_t i = 0; i < y.size(); ++i) {
    int d = y[i].v - (i < cur.size() ? cur[i].v : 0);
    if (d) lam.push_back(d / U);
  }
  return {cur, lam};
}

Partition algoA_inv(const Partition& reduced, const Ordinary& lambda, const Config& c) {
  require(is_partition(lambda), "algoA_inv: lambda is not a partition");
  std::size_t n = std::max(reduced.size(), lambda.size());
  Partition out;
  for (std::size_t i = 0; i < n; ++i) {
    Part base = i < reduced.size() ? reduced[i] : Part(0);
    out.push_back(shift(base, c.U * (i < lambda.size() ? lambda[i] : 0)));
  }
  return out;
}

namespace {

// Shared loop of algorithms B and C: strip copies of the largest eligible
// multiple of `base` until `done` holds.
Reduction strip_multiples(const Partition& y, int base, int copies, bool odd_only,
                          const std::function<bool(const Partition&)>& done, std::vector<RoundInfo>* rounds) {
  Partition cur = y;
  Ordinary lam;
  for (int round = 0; !done(cur); ++round) {
    if (round > kMaxRounds) throw DomainError("reduction does not terminate");
    int l1 = lam.empty() ? 0 : lam.front();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      int v = cur[i].v;
      if (v % base || v / base <= l1 || (odd_only && (v / base) % 2 == 0)) continue;
      int a = count_equal(cur, cur[i]) / copies - (cur[i].bar ? 1 : 0);
      if (a > 0) best = i;
    }
    require(best.has_value(), "no eligible part in " + to_string(cur));
    std::size_t i = *best;
    int lh = cur[i].v / base, t = count_equal(cur, cur[i]);
    int a = t / copies - (cur[i].bar ? 1 : 0);
    if (rounds) rounds->push_back({lh, t, a});
    cur.erase(cur.begin() + (i + 1 - copies * a), cur.begin() + i + 1);
    lam.insert(lam.begin(), a, lh);
  }
  return {cur, lam};
}

}  // namespace

Reduction algoB(const Partition& y, const Config& c, std::vector<RoundInfo>* rounds) {
  require(in_Z(y, c), "algoB: input is not in Z");
  require(!in_AO2(y, c), "algoB: input already in AO2");
  return strip_multiples(y, c.U / c.eps, c.eps, false, [&](const Partition& p) { return in_AO2(p, c); }, rounds);
}

Partition algoB_inv(const Partition& reduced, const Ordinary& lambda, const Config& c) {
  require(is_partition(lambda), "algoB_inv: lambda is not a partition");
  Partition y = reduced;
  for (int x : lambda) y = left_insert(x * (c.U / c.eps), 1 + c.eps / 2, y);
  return y;
}

bool in_Sprime(const Partition& y, const Config& c) {
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] == y[i - 1]) return false;
  if (c.b1_ln())
    for (auto p : y)
      if (p.v % c.U == 0) return false;
  return true;
}

Reduction algoC(const Partition& y, const Config& c, std::vector<RoundInfo>* rounds) {
  if (c.family != Family::B1 && c.family != Family::D1) throw DomainError("algoC applies to B1 and D1 only");
  require(in_AO2(y, c), "algoC: input is not in AO2");
  return strip_multiples(y, c.z1 / c.eps_tilde, c.eps_tilde, true,
                         [&](const Partition& p) { return in_Sprime(p, c); }, rounds);
}

Partition algoC_inv(const Partition& reduced, const Ordinary& odd, const Config& c) {
  if (c.family != Family::B1 && c.family != Family::D1) throw DomainError("algoC applies to B1 and D1 only");
  require(is_odd(odd), "algoC_inv: extracted partition is not odd");
  Partition y = reduced;
  for (int x : odd) y = left_insert(x * (c.z1 / c.eps_tilde), 1 + c.eps_tilde / 2, y);
  return y;
}

Reduction algoD(const Partition& mu, const Config& c) {
  if (c.family != Family::D2) throw DomainError("algoD applies to D2 only");
  require(in_AO4(mu, c), "algoD: input is not in AO4");
  Partition cur = mu;
  Ordinary lam;
  for (;;) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i].v % c.V == 0 && (cur[i].v / c.V) % 2 == 1) best = i;
    if (!best) break;
    lam.push_back(cur[*best].v / c.V);
    cur.erase(cur.begin() + *best);
  }
  std::sort(lam.rbegin(), lam.rend());
  return {cur, lam};
}

Partition algoD_inv(const Partition& reduced, const Ordinary& odd, const Config& c) {
  if (c.family != Family::D2) throw DomainError("algoD applies to D2 only");
  require(is_odd(odd), "algoD_inv: extracted partition is not odd");
  Partition y = reduced;
  for (int x : odd) y = left_insert(x * c.V, 1, y);
  return y;
}

Partition p_o(const Partition& y, const Config& c) {
  if (!c.uses_coding()) return y;
  const int U = c.U;
  Partition out = y;
  for (auto [s, e] : components(y, U)) {
    bool tail = tail_component(y, e, U);
    auto bl = blocks(y, s, e);
    for (std::size_t bi = 0; bi < bl.size(); ++bi) {
      auto [start, len] = bl[bi];
      bool keep = bi == 0 && !y[start].bar && !tail;
      for (std::size_t k = 0; k < len; ++k) out[start + k] = Part(y[start].v, !keep && k == 0);
    }
  }
  return out;
}

Partition p_o_inv(const Partition& y, const Config& c) {
  if (!c.uses_coding()) return y;
  const int U = c.U;
  Partition out = y;
  for (auto [s, e] : components(y, U)) {
    bool tail = tail_component(y, e, U);
    auto bl = blocks(y, s, e);
    std::size_t nb = bl.size();
    bool top_plain = true;
    for (std::size_t k = 0; k < bl[0].second; ++k) top_plain = top_plain && !y[bl[0].first + k].bar;
    for (std::size_t bi = 0; bi < nb; ++bi) {
      auto [start, len] = bl[bi];
      if (bi == 0 && top_plain) {
        require(!tail, "P^o inverse: unbarred top block in a tail component");
        continue;
      }
      bool shape = y[start].bar;
      for (std::size_t k = 1; k < len; ++k) shape = shape && !y[start + k].bar;
      require(shape, "P^o inverse: block at " + to_string(y[start]) + " is not barred-first");
      bool bar = tail ? (nb - 1 - bi) % 2 == 0 : (top_plain ? bi % 2 == 1 : bi % 2 == 0);
      for (std::size_t k = 0; k < len; ++k) out[start + k] = Part(y[start].v, bar);
    }
  }
  return out;
}

Partition p_s(const Partition& y, const Config& c) {
  if (!c.uses_coding()) return y;
  Partition out = y;
  for (auto [s, e] : components(y, c.U)) {
    auto bl = blocks(y, s, e);
    std::size_t nb = bl.size();
    for (std::size_t bi = 0; bi < nb; ++bi) {
      auto [start, len] = bl[bi];
      bool all_barred = true;
      for (std::size_t k = 0; k < len; ++k) all_barred = all_barred && y[start + k].bar;
      if (!all_barred) continue;
      for (std::size_t k = 0; k < len; ++k) out[start + k] = Part(y[start].v, (nb - 1 - bi) % 2 == 0);
    }
  }
  return out;
}

Partition p_s_inv(const Partition& y, const Config& c) {
  if (!c.uses_coding()) return y;
  Partition out = y;
  for (auto [s, e] : components(y, c.U)) {
    auto bl = blocks(y, s, e);
    std::size_t nb = bl.size();
    for (std::size_t bi = 0; bi < nb; ++bi) {
      auto [start, len] = bl[bi];
      require(y[start].bar == ((nb - 1 - bi) % 2 == 0), "P^s inverse: bar pattern broken at " + to_string(y[start]));
      for (std::size_t k = 0; k < len; ++k) out[start + k] = barred(y[start].v);
    }
  }
  return out;
}

bool in_AO1o(const Partition& y, const Config& c) {
  try {
    return in_AO1(p_o_inv(y, c), c);
  } catch (const DomainError&) {
    return false;
  }
}

bool in_T(const Partition& y, const Config& c) { return in_target(y, c) && in_AO1(p_s(y, c), c); }

Partition algoEprime(const Partition& y, const Config& c) {
  Partition cur;
  for (auto p : y)
    if (!is_column(p, c.U)) cur.push_back(p);
  for (int round = 0; !in_T(cur, c); ++round) {
    if (round > kMaxRounds) throw DomainError("E': no termination");
    std::size_t best = last_violation(cur, c);
    require(best > 0, "E': stuck at " + to_string(cur));
    for (std::size_t k = 0; k < best; ++k) {
      cur[k] = shift(cur[k], -c.U);
      require(cur[k].v > 0, "E': a row was exhausted");
    }
  }
  return cur;
}

ModularDiagram modular_diagram(const Partition& y, const Partition& yprime, const Config& c) {
  const int U = c.U;
  ModularDiagram d;
  std::map<int, int> cols;
  for (auto p : y) {
    if (is_column(p, U))
      ++cols[p.v / U];
    else
      d.rows.push_back(p);
  }
  d.reduced = yprime;
  d.t = static_cast<int>(d.rows.size());
  require(d.rows.size() == yprime.size(), "diagram: row count differs from the reduced partition");
  const int t = d.t;
  std::map<int, int> eps_of, seg_count;
  int maxseg = 0;
  for (std::size_t k = 0; k < d.rows.size(); ++k) {
    Part row = d.rows[k], red = yprime[k];
    require((row.v - red.v) % U == 0 && row.v >= red.v && row.bar == red.bar,
            "diagram: row " + to_string(row) + " does not sit over " + to_string(red));
    int e = (row.v - red.v) / U, s = row.v / U;
    auto [it, fresh] = eps_of.emplace(s, e);
    require(fresh || it->second == e, "diagram: two shifts in one segment");
    ++seg_count[s];
    maxseg = std::max(maxseg, s);
  }
  if (!cols.empty()) maxseg = std::max(maxseg, cols.rbegin()->first);
  const int K = std::max(maxseg, t) + 2;
  d.l.assign(K + 1, 0);
  d.eps.assign(K + 1, 0);
  d.r.assign(K + 1, 0);
  for (auto [k, n] : cols) d.l[k] = n;
  int acc = 0;
  d.e = t == 0 ? 1 : -1;
  for (int i = 0; i <= maxseg; ++i) {
    acc += seg_count.count(i) ? seg_count[i] : 0;
    d.r[i] = acc;
    if (d.e < 0 && acc == t) d.e = i + 1;
  }
  // empty segments below e repeat the previous shift
  for (int i = 1; i < d.e; ++i) d.eps[i] = eps_of.count(i) ? eps_of[i] : d.eps[i - 1];
  for (int i = d.e; i <= K; ++i) d.eps[i] = 0, d.r[i] = 0;
  return d;
}

std::vector<int> mu_formula(const ModularDiagram& d) {
  const int t = d.t;
  std::vector<int> mu(t + 1, 0);
  auto eps = [&](int i) { return i < static_cast<int>(d.eps.size()) ? d.eps[i] : 0; };
  auto ll = [&](int i) { return i < static_cast<int>(d.l.size()) ? d.l[i] : 0; };
  for (int i = 1; i <= t; ++i) {
    int v = ll(i) - (eps(i) - eps(i - 1));
    for (int j = 1; j <= i; ++j)
      if (j + t - d.r[j - 1] == i) v += eps(j) - eps(j - 1);
    mu[i] = v;
  }
  return mu;
}

std::vector<int> mu_walk(const ModularDiagram& d, const Partition& y, const Config& c) {
  // Climb the segments from the bottom. Each rise of the row shift by one is
  // an L-hook: it eats one column at that height and leaves a part of length
  // (height + rows not yet passed). Uneaten columns are parts of their height.
  const int U = c.U, t = d.t;
  std::map<int, int> cols;
  std::vector<std::pair<Part, Part>> asc;  // (row, reduced row), bottom first
  {
    Partition rows;
    for (auto p : y) {
      if (is_column(p, U))
        ++cols[p.v / U];
      else
        rows.push_back(p);
    }
    require(rows.size() == d.reduced.size(), "walk: row count differs");
    for (std::size_t k = rows.size(); k-- > 0;) asc.emplace_back(rows[k], d.reduced[k]);
  }
  std::vector<int> parts;
  std::size_t k = 0;
  int level = 0;
  for (int s = 0; k < asc.size(); ++s) {
    std::optional<int> here;
    std::size_t j = k;
    while (j < asc.size() && asc[j].first.v / U == s) {
      int sh = (asc[j].first.v - asc[j].second.v) / U;
      require(!here || *here == sh, "walk: two shifts in one segment");
      here = sh;
      ++j;
    }
    int next = here.value_or(level);
    require(next >= level, "walk: row shift decreases before the top row");
    for (int h = level; h < next; ++h) {
      require(cols[s] > 0, "walk: hook at height " + std::to_string(s) + " has no column");
      --cols[s];
      parts.push_back(s + t - static_cast<int>(k));
    }
    level = next;
    k = j;
  }
  for (auto [h, n] : cols) parts.insert(parts.end(), n, h);
  int top = t;
  for (int p : parts) top = std::max(top, p);
  std::vector<int> mu(top + 1, 0);
  for (int p : parts) ++mu[p];
  return mu;
}

Ordinary lambda_from_mu(const std::vector<int>& mu) {
  Ordinary lam;
  for (int i = static_cast<int>(mu.size()) - 1; i >= 1; --i) {
    require(mu[i] >= 0, "negative multiplicity for part " + std::to_string(i));
    lam.insert(lam.end(), mu[i], i);
  }
  return lam;
}

Reduction algoE(const Partition& y, const Config& c, ModularDiagram* diag) {
  require(in_AO1o(y, c), "algoE: input is not in the coded AO1 set");
  Partition yp = algoEprime(y, c);
  ModularDiagram d = modular_diagram(y, yp, c);
  Ordinary lam = lambda_from_mu(mu_formula(d));
  if (diag) *diag = d;
  return {yp, lam};
}

Partition algoF(const Partition& yprime, const Ordinary& lambda, const Config& c) {
  require(is_partition(lambda), "algoF: lambda is not a partition");
  const int U = c.U, t = static_cast<int>(yprime.size());
  require(lambda.empty() || lambda[0] <= t, "algoF: largest part of lambda exceeds the number of rows");
  Partition asc(yprime.rbegin(), yprime.rend());
  const int K = size(lambda);
  std::vector<int> target(t + 1, 0);
  for (int x : lambda) ++target[x];
  auto seg = [&](Part p) { return p.v / U; };

  auto build = [&](const Partition& rows, const std::vector<int>& cols) {
    Partition all = rows;
    for (int i = 1; i < static_cast<int>(cols.size()); ++i) all.insert(all.end(), cols[i], Part(i * U));
    return sorted(all);
  };

  std::optional<Partition> found;
  auto check = [&](const Partition& rows) {
    std::vector<int> none;
    Partition base = build(rows, none);
    std::vector<int> mu0;
    try {
      mu0 = mu_formula(modular_diagram(base, yprime, c));
    } catch (const DomainError&) {
      return;
    }
    std::vector<int> cols(t + 1, 0);
    for (int i = 1; i <= t; ++i) {
      cols[i] = target[i] - mu0[i];
      if (cols[i] < 0) return;
    }
    Partition y2 = build(rows, cols);
    if (!in_AO1o(y2, c)) return;
    Partition back = algoEprime(y2, c);
    if (back != yprime) return;
    if (lambda_from_mu(mu_formula(modular_diagram(y2, back, c))) != lambda) return;
    found = y2;
  };

  // Choose, segment by segment, the row shift (rises by at most one) and how
  // many of the lowest unplaced rows end in this segment.
  Partition rows;
  std::function<void(int, int, int, int)> dfs = [&](int s, int eps, int k, int used) {
    if (found) return;
    if (k == t) {
      check(rows);
      return;
    }
    if (s - eps - 1 > seg(asc[k])) return;
    for (int e2 = eps; e2 <= (s == 0 ? eps : eps + 1); ++e2) {
      if (e2 > K || seg(asc[k]) + e2 < s) continue;
      int j = k;
      while (j < t && seg(asc[j]) + e2 == s) ++j;
      for (int take = j - k; take >= 0; --take) {
        int nu = used + take * e2;
        if (nu > K) continue;
        for (int q = k; q < k + take; ++q) rows.push_back(shift(asc[q], e2 * U));
        dfs(s + 1, e2, k + take, nu);
        rows.resize(rows.size() - take);
        if (found) return;
      }
    }
  };
  if (t == 0)
    check({});
  else
    dfs(0, 0, 0, 0);
  require(found.has_value(), "algoF: no hook placement reproduces " + to_string(yprime) + " with " + to_string(lambda));
  return *found;
}

Reduction algoDprime(const Partition& y, const Config& c) {
  require(in_target(y, c), "D': input is not in the target set");
  Partition cur = y;
  std::vector<int> nu(y.size(), 0);
  for (int round = 0; !in_T(cur, c); ++round) {
    if (round > kMaxRounds) throw DomainError("D': no termination");
    std::size_t best = last_violation(cur, c);
    require(best > 0, "D': stuck at " + to_string(cur));
    for (std::size_t k = 0; k < best; ++k) {
      cur[k] = shift(cur[k], -c.U);
      require(cur[k].v > 0, "D': a row was exhausted");
      ++nu[k];
    }
  }
  Ordinary out;
  for (int x : nu)
    if (x) out.push_back(x);
  return {cur, out};
}

Partition algoDprime_inv(const Partition& yprime, const Ordinary& nu, const Config& c) {
  require(is_partition(nu), "D' inverse: nu is not a partition");
  return add_rowwise(yprime, nu, c.U);
}

namespace {

void note(std::vector<TraceStep>* trace, const std::string& label, const Partition& y, const Ordinary& lam = {}) {
  if (trace) trace->push_back({label, y, lam});
}

// AO1 -> AO2 (AO4 for D2) through E and transposed row-wise reinsertion.
Partition theta_core(const Partition& y1, const Config& c, std::vector<TraceStep>* trace) {
  Partition y2 = p_o(y1, c);
  note(trace, "P^o", y2);
  ModularDiagram d;
  Reduction r = algoE(y2, c, &d);
  note(trace, "E", r.reduced, r.extracted);
  Ordinary nu = transpose(r.extracted);
  note(trace, "transpose", r.reduced, nu);
  Partition y4 = add_rowwise(r.reduced, nu, c.U);
  note(trace, "reinsert", y4);
  return y4;
}

Partition theta_core_inv(const Partition& y4, const Config& c, std::vector<TraceStep>* trace) {
  Reduction r = algoDprime(y4, c);
  note(trace, "D'", r.reduced, r.extracted);
  Ordinary lam = transpose(r.extracted);
  note(trace, "transpose", r.reduced, lam);
  Partition y2 = algoF(r.reduced, lam, c);
  note(trace, "F", y2);
  Partition y1 = p_o_inv(y2, c);
  note(trace, "P^o inverse", y1);
  return y1;
}

}  // namespace

Partition theta(const Partition& y, const Config& c, std::vector<TraceStep>* trace) {
  require(in_AO1(y, c), "theta: input " + to_string(y) + " is not in AO1");
  note(trace, "input", y);
  Partition out = theta_core(y, c, trace);
  if (c.family == Family::D2) {
    Reduction r = algoD(out, c);
    note(trace, "D", r.reduced, r.extracted);
    Ordinary strict = odd_to_strict(r.extracted);
    note(trace, "odd to strict", r.reduced, strict);
    out = r.reduced;
    for (int x : strict) out = left_insert(x * c.V, 1, out);
    note(trace, "insert", out);
  }
  return out;
}

Partition theta_inv(const Partition& y, const Config& c, std::vector<TraceStep>* trace) {
  require(in_AO2(y, c), "theta_inv: input " + to_string(y) + " is not in AO2");
  note(trace, "input", y);
  Partition y4 = y;
  if (c.family == Family::D2) {
    Partition rest;
    Ordinary strict;
    for (auto p : y) {
      if (p.v % c.V == 0)
        strict.push_back(p.v / c.V);
      else
        rest.push_back(p);
    }
    Ordinary odd = strict_to_odd(strict);
    note(trace, "strict to odd", rest, odd);
    y4 = algoD_inv(rest, odd, c);
    note(trace, "D inverse", y4);
  }
  Partition out = theta_core_inv(y4, c, trace);
  return out;
}

}  // namespace yw
