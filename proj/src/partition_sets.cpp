#include <algorithm>
#include <cstdlib>
#include <functional>

#include "yw/error.hpp"
#include "yw/sets.hpp"

namespace yw {

bool in_alphabet(Part p, const Config& c) {
  if (p.v <= 0) return p.v == 0;
  if (!p.bar) return true;
  // barred letters are the odd multiples of n here
  if (c.b1_ln()) return p.v % c.n == 0 && (p.v / c.n) % 2 == 1;
  if (c.z1 == 0) return false;
  if (p.v == c.z1) return true;
  return p.v > c.z2 && (p.v - c.z2) % c.z1 == 0;
}

bool repeatable(Part p, const Config& c) {
  int v = p.v;
  if (v == 0) return true;
  if (v == c.z1) return true;
  bool ladder = c.z1 > 0 && v >= c.z2 && (v - c.z2) % c.z1 == 0;
  if (p.bar) return ladder && v > c.z2;
  return ladder || v % c.z3 == 0;
}

bool congruent(Part p, const Config& c) { return p.v % c.V == c.z3 % c.V || p.v % c.V == 0; }

bool in_Z(const Partition& y, const Config& c) {
  if (!is_decreasing(y) || !is_in_Pt(y)) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].v <= 0 || !in_alphabet(y[i], c)) return false;
    if (i > 0 && y[i] == y[i - 1] && !repeatable(y[i], c)) return false;
  }
  return true;
}

bool in_AO1(const Partition& y, const Config& c) {
  if (!in_Z(y, c)) return false;
  const Part U(c.U);
  if (!y.empty() && !(y.back() < U)) return false;
  for (std::size_t i = 1; i < y.size(); ++i) {
    Part d = subtract(y[i - 1], y[i]);
    if (d > U) return false;
    if (d == U && (congruent(y[i - 1], c) || congruent(y[i], c))) return false;
  }
  return true;
}

namespace {

bool column(Part p, int U) { return !p.bar && p.v % U == 0; }

bool has_repeat(const Partition& y) {
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] == y[i - 1]) return true;
  return false;
}

}  // namespace

bool in_AO2(const Partition& y, const Config& c) {
  if (!in_Z(y, c)) return false;
  if (c.family == Family::D2) return !has_repeat(y);
  for (auto p : y)
    if (column(p, c.U)) return false;
  switch (c.family) {
    case Family::A2odd: return !has_repeat(y);
    case Family::A2even: return true;
    default: break;
  }
  if (c.b1_ln()) {
    for (auto p : y)
      if (p.v % c.U == 0) return false;
    return true;
  }
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] == y[i - 1] && y[i].v % c.U != c.z3 % c.U) return false;
  return true;
}

bool in_AO4(const Partition& y, const Config& c) {
  if (!in_Z(y, c)) return false;
  for (auto p : y)
    if (column(p, c.U)) return false;
  return true;
}

bool in_restricted(const Partition& y, const Config& c, const std::vector<int>& X, bool second) {
  for (auto p : y) {
    if (std::find(X.begin(), X.end(), p.v % c.z3) != X.end()) continue;
    if (p.v % c.U == 0 && (!second || p.bar)) continue;
    return false;
  }
  return true;
}

namespace {

bool in_residues(int v, int mod, const std::vector<int>& X) {
  return std::find(X.begin(), X.end(), v % mod) != X.end();
}

// AO1 (modulus N, repeat ladder N) and AO3 (modulus 2N, repeat ladder N).
bool gap_family(const Ordinary& y, int mod, int N, const std::vector<int>& X) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] % mod != 0 && !in_residues(y[i], mod, X)) return false;
    if (i == 0) continue;
    int d = y[i - 1] - y[i];
    if (d == 0 && y[i] % N != 0) return false;
    if (d > mod) return false;
    if (d == mod && (y[i] % N == 0 || y[i - 1] % N == 0)) return false;
  }
  return y.empty() || y.back() < mod;
}

}  // namespace

bool in_classical(const Ordinary& y, int which, int N, const std::vector<int>& X) {
  if (!is_partition(y) || N < 1) return false;
  switch (which) {
    case 1: return gap_family(y, N, N, X);
    case 2:
      return is_strict(y) && std::all_of(y.begin(), y.end(), [&](int v) { return in_residues(v, N, X); });
    case 3: return gap_family(y, 2 * N, N, X);
    case 4:
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (!in_residues(y[i], 2 * N, X)) return false;
        if (i > 0 && y[i] == y[i - 1] && y[i] % N != 0) return false;
      }
      return true;
    case 5: {
      bool zero_ok = std::find(X.begin(), X.end(), N) != X.end();
      return is_strict(y) && std::all_of(y.begin(), y.end(), [&](int v) {
               return in_residues(v, 2 * N, X) || (zero_ok && v % (2 * N) == 0);
             });
    }
    default: throw InvalidArgument("classical family index must be 1..5");
  }
}

namespace {

Ordinary plain(const Partition& y) {
  Ordinary o;
  for (auto p : y) {
    if (p.bar) return {-1};  // never a partition
    o.push_back(p.v);
  }
  return o;
}

int classical_index(SetKind k) {
  switch (k) {
    case SetKind::AO1N: return 1;
    case SetKind::AO2N: return 2;
    case SetKind::AO3N: return 3;
    case SetKind::AO4N: return 4;
    case SetKind::AO5N: return 5;
    default: return 0;
  }
}

bool needs_config(SetKind k) {
  return k == SetKind::Z || k == SetKind::AO1 || k == SetKind::AO2 || k == SetKind::AO1X || k == SetKind::AO2X;
}

}  // namespace

bool contains(const SetSpec& s, const Partition& y) {
  if (!is_decreasing(y)) return false;
  for (auto p : y)
    if (p.v <= 0) return false;
  switch (s.kind) {
    case SetKind::Z: return in_Z(y, *s.cfg);
    case SetKind::AO1: return in_AO1(y, *s.cfg);
    case SetKind::AO2: return in_AO2(y, *s.cfg);
    case SetKind::AO1X: return in_AO1(y, *s.cfg) && in_restricted(y, *s.cfg, s.X, false);
    case SetKind::AO2X: return in_AO2(y, *s.cfg) && in_restricted(y, *s.cfg, s.X, true);
    case SetKind::AO1N:
    case SetKind::AO2N:
    case SetKind::AO3N:
    case SetKind::AO4N:
    case SetKind::AO5N: return in_classical(plain(y), classical_index(s.kind), s.N, s.X);
    case SetKind::Strict: return is_strict(plain(y));
    case SetKind::StrictAvoiding: {
      auto o = plain(y);
      return is_strict(o) && std::none_of(o.begin(), o.end(), [&](int v) { return v % s.N == 0; });
    }
    case SetKind::Odd: return is_odd(plain(y));
    case SetKind::Overpartitions: return is_overpartition(y);
    case SetKind::Pt: return is_in_Pt(y);
  }
  return false;
}

void validate(const SetSpec& s) {
  if (needs_config(s.kind) && !s.cfg) throw InvalidArgument(to_string(s.kind) + " needs a family configuration");
  int hi = 0;
  if (s.kind == SetKind::AO1X || s.kind == SetKind::AO2X) hi = s.cfg->z3 - 1;
  if (s.kind == SetKind::AO1N || s.kind == SetKind::AO2N) hi = s.N - 1;
  if (s.kind == SetKind::AO3N || s.kind == SetKind::AO4N || s.kind == SetKind::AO5N) hi = 2 * s.N - 1;
  bool residue_kind = hi != 0 || classical_index(s.kind) != 0;
  if (classical_index(s.kind) && s.N < 1) throw InvalidArgument("classical sets need N >= 1");
  if (s.kind == SetKind::StrictAvoiding && s.N < 1) throw InvalidArgument("strict-avoiding needs a modulus >= 1");
  if (residue_kind) {
    if (s.X.empty()) throw InvalidArgument("residue set X must be nonempty");
    for (std::size_t i = 0; i < s.X.size(); ++i) {
      if (s.X[i] < 1 || s.X[i] > hi)
        throw InvalidArgument("residue " + std::to_string(s.X[i]) + " outside 1.." + std::to_string(hi));
      if (i > 0 && s.X[i] <= s.X[i - 1]) throw InvalidArgument("residue set X must be strictly increasing");
    }
  } else if (!s.X.empty()) {
    throw InvalidArgument("residue set X given for " + to_string(s.kind));
  }
}

std::uint64_t max_space() {
  const char* env = std::getenv("YW_MAX_SPACE");
  if (!env || !*env) return 200000000ull;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidArgument("YW_MAX_SPACE must be a positive integer");
  return v;
}

namespace {

// Cheap necessary conditions used to prune the descent; the leaf still runs contains().
struct Pruner {
  const SetSpec& s;

  bool letter(Part p) const {
    switch (s.kind) {
      case SetKind::Z:
      case SetKind::AO1:
      case SetKind::AO2:
        return in_alphabet(p, *s.cfg);
      case SetKind::AO1X:
      case SetKind::AO2X:
        return in_alphabet(p, *s.cfg) && in_restricted({p}, *s.cfg, s.X, s.kind == SetKind::AO2X);
      case SetKind::Overpartitions:
      case SetKind::Pt: return true;
      case SetKind::Odd: return !p.bar && p.v % 2 == 1;
      case SetKind::StrictAvoiding: return !p.bar && p.v % s.N != 0;
      default: return !p.bar;
    }
  }

  bool pair(Part a, Part b) const {
    // equal values: only x, x, ..., x~ (one bar, placed last by the order)
    if (s.kind == SetKind::Overpartitions) return !(a.v == b.v && a.bar);
    if (a.v == b.v && a.bar != b.bar) return false;
    switch (s.kind) {
      case SetKind::Z:
      case SetKind::AO1:
      case SetKind::AO2:
      case SetKind::AO1X:
      case SetKind::AO2X: {
        const Config& c = *s.cfg;
        if (a == b && !repeatable(a, c)) return false;
        if (s.kind == SetKind::AO1 || s.kind == SetKind::AO1X) {
          Part d = subtract(a, b), U(c.U);
          if (d > U || (d == U && (congruent(a, c) || congruent(b, c)))) return false;
        }
        return true;
      }
      case SetKind::Strict:
      case SetKind::StrictAvoiding:
      case SetKind::AO2N:
      case SetKind::AO5N: return a.v != b.v;
      default: return true;
    }
  }
};

template <class Emit>
void descend(const SetSpec& s, int m, Emit&& emit) {
  Pruner pr{s};
  std::vector<Part> letters;
  for (int v = m; v >= 1; --v) {
    if (pr.letter(Part(v))) letters.push_back(Part(v));
    if (pr.letter(barred(v))) letters.push_back(barred(v));
  }
  const std::uint64_t budget = max_space();
  std::uint64_t nodes = 0;
  Partition cur;
  std::function<void(int, std::size_t)> rec = [&](int rest, std::size_t start) {
    if (++nodes > budget)
      throw ResourceError("enumeration exceeded YW_MAX_SPACE=" + std::to_string(budget) + " search nodes");
    if (rest == 0) {
      if (contains(s, cur)) emit(cur);
      return;
    }
    for (std::size_t i = start; i < letters.size(); ++i) {
      Part p = letters[i];
      if (p.v > rest) continue;
      if (!cur.empty() && !pr.pair(cur.back(), p)) continue;
      cur.push_back(p);
      rec(rest - p.v, i);
      cur.pop_back();
    }
  };
  rec(m, 0);
}

}  // namespace

std::vector<Partition> enumerate(const SetSpec& s, int m) {
  validate(s);
  if (m < 0) throw InvalidArgument("size must be nonnegative");
  std::vector<Partition> out;
  descend(s, m, [&](const Partition& y) { out.push_back(y); });
  return out;
}

std::int64_t count(const SetSpec& s, int m) {
  validate(s);
  if (m < 0) throw InvalidArgument("size must be nonnegative");
  std::int64_t n = 0;
  descend(s, m, [&](const Partition&) { ++n; });
  return n;
}

namespace {

const std::pair<SetKind, const char*> kNames[] = {
    {SetKind::Z, "z"},
    {SetKind::AO1, "ao1"},
    {SetKind::AO2, "ao2"},
    {SetKind::AO1X, "ao1-restricted"},
    {SetKind::AO2X, "ao2-restricted"},
    {SetKind::AO1N, "ao1-classical"},
    {SetKind::AO2N, "ao2-classical"},
    {SetKind::AO3N, "ao3-classical"},
    {SetKind::AO4N, "ao4-classical"},
    {SetKind::AO5N, "ao5-classical"},
    {SetKind::Strict, "strict"},
    {SetKind::StrictAvoiding, "strict-avoiding"},
    {SetKind::Odd, "odd"},
    {SetKind::Overpartitions, "overpartitions"},
    {SetKind::Pt, "pt"},
};

}  // namespace

SetKind parse_set_kind(const std::string& s) {
  for (auto& [k, name] : kNames)
    if (s == name) return k;
  throw InvalidArgument("unknown set kind '" + s + "'");
}

std::string to_string(SetKind k) {
  for (auto& [kk, name] : kNames)
    if (kk == k) return name;
  return "?";
}

}  // namespace yw
