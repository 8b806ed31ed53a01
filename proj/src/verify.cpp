#include "yw/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "yw/bijections.hpp"
#include "yw/error.hpp"
#include "yw/series.hpp"
#include "yw/sets.hpp"

namespace yw {

namespace {

Report make_report(const std::string& identity, const Config* c) {
  Report r;
  r.identity = identity;
  if (c) {
    r.family = to_string(c->family);
    r.weight = to_string(c->weight);
    r.rank = c->rank;
  }
  return r;
}

void finish(Report& r) {
  r.pass = std::all_of(r.results.begin(), r.results.end(), [](const ReportRow& x) { return x.pass; });
}

SetSpec spec(SetKind k, const Config& c, std::vector<int> X = {}) {
  SetSpec s;
  s.kind = k;
  s.cfg = c;
  s.X = std::move(X);
  return s;
}

std::int64_t strict_enumerated(int k, int avoid) {
  if (k < 0) return 0;
  SetSpec s;
  s.kind = avoid ? SetKind::StrictAvoiding : SetKind::Strict;
  s.N = avoid;
  return count(s, k);
}

void check_cap(int M) {
  if (M < 0) throw InvalidArgument("max size must be nonnegative");
}

}  // namespace

Report verify_counts(const Config& c, int M, int jobs) {
  check_cap(M);
  Report rep = make_report("ao", &c);
  Series prod = product_series(c, M);
  rep.results = parallel_over_m(M, jobs, [&](int m) {
    std::int64_t a = count(spec(SetKind::AO1, c), m), b = count(spec(SetKind::AO2, c), m);
    bool ok = a == b && a == prod[m];
    return ReportRow{m, a, b, ok, ok ? "" : "product coefficient " + std::to_string(prod[m])};
  });
  finish(rep);
  return rep;
}

Report fock_identity(const Config& c, int M, int jobs) {
  check_cap(M);
  Report rep = make_report("fock", &c);
  const int U = c.U;
  bool single = c.family == Family::D2 || c.family == Family::A2even || c.family == Family::A2odd;
  int avoid = (c.family == Family::A2even || c.b1_ln()) ? U : 0;
  rep.results = parallel_over_m(M, jobs, [&](int m) {
    std::int64_t lhs = count(spec(SetKind::Z, c), m), rhs = 0;
    if (single) {
      for (int k = 0; k * U <= m; ++k) rhs += strict_enumerated(m - k * U, avoid) * partition_count(k);
    } else {
      for (int l = 0; l * U <= m; ++l)
        for (int k = 0; l * U + k * c.z1 <= m; ++k)
          rhs += strict_enumerated(m - l * U - k * c.z1, avoid) * strict_enumerated(k, 0) * partition_count(l);
    }
    return ReportRow{m, lhs, rhs, lhs == rhs, ""};
  });
  finish(rep);
  return rep;
}

Report euler_identity(int M) {
  check_cap(M);
  Report rep = make_report("euler", nullptr);
  Series distinct = Series::one(M), odd = Series::one(M);
  for (int i = 1; i <= M; ++i) distinct.mul_one_plus(i);
  for (int i = 1; i <= M; i += 2) odd.div_one_minus(i);
  for (int m = 0; m <= M; ++m) {
    std::int64_t q = strict_count(m);
    bool ok = distinct[m] == odd[m] && q == distinct[m];
    rep.results.push_back({m, distinct[m], odd[m], ok, ok ? "" : "strict count " + std::to_string(q)});
  }
  finish(rep);
  return rep;
}

std::vector<std::vector<int>> sample_residue_sets(const Config& c, int how_many, unsigned seed) {
  const int r = c.z3 - 1;
  const std::uint64_t total = (std::uint64_t{1} << r) - 1;
  std::vector<std::uint64_t> masks;
  if (total <= static_cast<std::uint64_t>(how_many)) {
    for (std::uint64_t m = 1; m <= total; ++m) masks.push_back(m);
  } else {
    std::mt19937_64 rng(seed + 7919u * static_cast<unsigned>(c.family) + 131u * static_cast<unsigned>(c.rank) +
                        static_cast<unsigned>(c.weight));
    std::uniform_int_distribution<std::uint64_t> pick(1, total);
    std::set<std::uint64_t> seen;
    while (static_cast<int>(masks.size()) < how_many) {
      auto m = pick(rng);
      if (seen.insert(m).second) masks.push_back(m);
    }
  }
  std::vector<std::vector<int>> out;
  for (auto m : masks) {
    std::vector<int> X;
    for (int x = 1; x <= r; ++x)
      if ((m >> (x - 1)) & 1) X.push_back(x);
    out.push_back(X);
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& X) {
  std::string s = "{";
  for (std::size_t i = 0; i < X.size(); ++i) s += (i ? "," : "") + std::to_string(X[i]);
  return s + "}";
}

// Empty string when theta maps `from` bijectively onto `to`; otherwise the first problem.
std::string theta_onto(const std::vector<Partition>& from, const std::vector<Partition>& to, const Config& c) {
  std::set<Partition> want(to.begin(), to.end()), got;
  for (auto& y : from) {
    Partition z;
    try {
      z = theta(y, c);
    } catch (const std::exception& e) {
      return "theta" + to_string(y) + ": " + e.what();
    }
    if (size(z) != size(y)) return "theta" + to_string(y) + " changes size";
    if (!want.count(z)) return "theta" + to_string(y) + " = " + to_string(z) + " outside target";
    if (!got.insert(z).second) return "theta" + to_string(y) + " = " + to_string(z) + " repeated";
  }
  if (got.size() != want.size()) return "image misses " + std::to_string(want.size() - got.size()) + " targets";
  return "";
}

}  // namespace

Report restricted_identity(const Config& c, int M, int jobs, unsigned seed) {
  check_cap(M);
  Report rep = make_report("restricted", &c);
  auto sets = sample_residue_sets(c, 10, seed);
  rep.results = parallel_over_m(M, jobs, [&](int m) {
    ReportRow row{m, 0, 0, true, ""};
    for (auto& X : sets) {
      auto A = enumerate(spec(SetKind::AO1X, c, X), m);
      auto B = enumerate(spec(SetKind::AO2X, c, X), m);
      row.lhs += static_cast<std::int64_t>(A.size());
      row.rhs += static_cast<std::int64_t>(B.size());
      std::string why = A.size() != B.size() ? "counts differ" : theta_onto(A, B, c);
      if (!why.empty() && row.pass) {
        row.pass = false;
        row.note = "X=" + join(X) + ": " + why;
      }
    }
    return row;
  });
  finish(rep);
  return rep;
}

Report classical_identity(int maxN12, int maxN345, int M, int jobs) {
  check_cap(M);
  Report rep = make_report("classical", nullptr);
  struct Family_ {
    int N;
    std::vector<int> X;
    bool pair12;
  };
  std::vector<Family_> fams;
  for (int N = 1; N <= maxN12; ++N)
    for (int mask = 1; mask < (1 << (N - 1)); ++mask) {
      std::vector<int> X;
      for (int x = 1; x < N; ++x)
        if ((mask >> (x - 1)) & 1) X.push_back(x);
      fams.push_back({N, X, true});
    }
  for (int N = 1; N <= maxN345; ++N)
    for (int mask = 1; mask < (1 << (2 * N - 1)); ++mask) {
      std::vector<int> X;
      for (int x = 1; x < 2 * N; ++x)
        if ((mask >> (x - 1)) & 1) X.push_back(x);
      fams.push_back({N, X, false});
    }
  auto cnt = [](SetKind k, int N, const std::vector<int>& X, int m) {
    SetSpec s;
    s.kind = k;
    s.N = N;
    s.X = X;
    return count(s, m);
  };
  rep.results = parallel_over_m(M, jobs, [&](int m) {
    ReportRow row{m, 0, 0, true, ""};
    for (auto& f : fams) {
      std::int64_t a, b, e = 0;
      if (f.pair12) {
        a = cnt(SetKind::AO1N, f.N, f.X, m);
        b = cnt(SetKind::AO2N, f.N, f.X, m);
        e = b;
      } else {
        a = cnt(SetKind::AO3N, f.N, f.X, m);
        b = cnt(SetKind::AO4N, f.N, f.X, m);
        e = cnt(SetKind::AO5N, f.N, f.X, m);
      }
      row.lhs += a;
      row.rhs += b;
      if ((a != b || b != e) && row.pass) {
        row.pass = false;
        row.note = std::string(f.pair12 ? "AO1/AO2" : "AO3/AO4/AO5") + " N=" + std::to_string(f.N) + " X=" + join(f.X);
      }
    }
    return row;
  });
  finish(rep);
  return rep;
}

Report theta_bijectivity(const Config& c, int M, int jobs) {
  check_cap(M);
  Report rep = make_report("theta", &c);
  rep.results = parallel_over_m(M, jobs, [&](int m) {
    auto A = enumerate(spec(SetKind::AO1, c), m);
    auto B = enumerate(spec(SetKind::AO2, c), m);
    ReportRow row{m, static_cast<std::int64_t>(A.size()), static_cast<std::int64_t>(B.size()), true, ""};
    std::string why = theta_onto(A, B, c);
    if (why.empty()) {
      for (auto& y : A) {
        try {
          if (theta_inv(theta(y, c), c) != y) why = "theta_inv does not undo theta on " + to_string(y);
        } catch (const std::exception& e) {
          why = "theta_inv on theta" + to_string(y) + ": " + e.what();
        }
        if (!why.empty()) break;
      }
    }
    row.pass = why.empty();
    row.note = why;
    return row;
  });
  finish(rep);
  return rep;
}

namespace {

struct Checker {
  std::vector<Check> out;
  template <class F>
  void operator()(const std::string& name, F f) {
    try {
      std::string detail;
      bool ok = f(detail);
      out.push_back({name, ok, detail});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
};

bool same(std::string& detail, const std::string& got, const std::string& want) {
  detail = got;
  return got == want;
}

}  // namespace

std::vector<Check> selfcheck() {
  Checker ck;
  auto P = [](const char* s) { return parse_partition(s); };
  const Config a4 = make_config(Family::A2odd, 4, Weight::L0);
  const Config b3n = make_config(Family::B1, 3, Weight::Ln);

  ck("order 2 > 2~ > 1 > 1~ > 0", [&](std::string&) {
    return Part(2) > barred(2) && barred(2) > Part(1) && Part(1) > barred(1) && barred(1) > Part(0);
  });
  ck("3~ - 2 = 1~, 2~ - 2 = 0", [&](std::string& d) {
    return same(d, to_string(subtract(barred(3), Part(2))) + " " + to_string(subtract(barred(2), Part(2))), "1~ 0");
  });
  ck("3~ + 2 = 5~, 2~ + 0 = 2~, 2*2~ = 4~", [&](std::string& d) {
    return same(d,
                to_string(add(barred(3), Part(2))) + " " + to_string(add(barred(2), Part(0))) + " " +
                    to_string(scalar_mul(2, barred(2))),
                "5~ 2~ 4~");
  });
  ck("(5,3~,3~,2,2,1) in Pt of size 16; (5,3,3~,2,2,1) not in Pt", [&](std::string& d) {
    d = std::to_string(size(P("5,3~,3~,2,2,1")));
    return is_in_Pt(P("5,3~,3~,2,2,1")) && size(P("5,3~,3~,2,2,1")) == 16 && !is_in_Pt(P("5,3,3~,2,2,1"));
  });
  ck("overpartitions of 3: 8", [&](std::string& d) {
    SetSpec s;
    s.kind = SetKind::Overpartitions;
    auto n = count(s, 3);
    d = std::to_string(n);
    return n == 8;
  });
  ck("transpose (7,4,3) = (3,3,3,2,1,1,1)", [&](std::string& d) {
    return same(d, to_string(transpose({7, 4, 3})), "(3,3,3,2,1,1,1)");
  });
  ck("config B1 n=3 Ln: z=(3,6,3), U=V=6", [&](std::string&) {
    return b3n.z1 == 3 && b3n.z2 == 6 && b3n.z3 == 3 && b3n.U == 6 && b3n.V == 6 && b3n.Delta == 6;
  });
  ck("kappa B1 n=3 Ln: i=3 -> 2, i=6 -> 1", [&](std::string&) { return kappa(b3n, 3) == 2 && kappa(b3n, 6) == 1; });
  ck("(33,31,28~,28~,21,21,15,9,7,1) in AO1, A2odd n=4", [&](std::string&) {
    return in_AO1(P("33,31,28~,28~,21,21,15,9,7,1"), a4);
  });
  ck("(31,17,15~,15~,13,7,5,3,3) in AO2[109], B1 n=3 Ln", [&](std::string&) {
    auto y = P("31,17,15~,15~,13,7,5,3,3");
    return in_AO2(y, b3n) && size(y) == 109;
  });
  ck("Algorithm B example (printed 102; parts sum to 101)", [&](std::string& d) {
    auto y = P("20,14,14,13,11,7~,7~,7~,5,3");
    std::vector<RoundInfo> rounds;
    auto r = algoB(y, a4, &rounds);
    d = to_string(r.reduced) + " " + to_string(r.extracted);
    return size(y) == 101 && r.reduced == P("20,13,11,7~,5,3") && r.extracted == Ordinary{2, 2, 1, 1} &&
           rounds.at(0).lambda_hat == 1 && rounds[0].t == 3 && rounds[0].a == 2 && algoB_inv(r.reduced, r.extracted, a4) == y;
  });
  ck("Algorithm C example", [&](std::string& d) {
    auto y = P("31,17,15~,15~,13,7,5,3,3");
    std::vector<RoundInfo> rounds;
    auto r = algoC(y, b3n, &rounds);
    d = to_string(r.reduced) + " " + to_string(r.extracted);
    return r.reduced == P("31,17,15~,13,7,5") && r.extracted == Ordinary{5, 1, 1} && rounds.at(0).lambda_hat == 1 &&
           rounds[0].t == 2 && rounds[0].a == 2 && size(r.reduced) == 88;
  });
  ck("P^o example (1)", [&](std::string& d) {
    return same(d, to_string(p_o(P("33,31,28~,28~,21,21,15,9,7,1"), a4)), "(33,31,28~,28,21~,21,15,9,7,1)");
  });
  ck("P^o example (2)", [&](std::string& d) {
    return same(d, to_string(p_o(P("33,31,28,28,21~,21~,15,9,7,1"), a4)), "(33,31,28,28,21~,21,15,9,7,1)");
  });
  ck("E example (1) with its diagram table", [&](std::string& d) {
    ModularDiagram md;
    auto r = algoE(P("33,31,28~,28,21~,21,15,9,7,1"), a4, &md);
    d = to_string(r.reduced) + " " + to_string(r.extracted);
    std::vector<int> l(md.l.begin() + 1, md.l.begin() + 8), e(md.eps.begin() + 1, md.eps.begin() + 8),
        rr(md.r.begin(), md.r.begin() + 5);
    return r.reduced == P("26,24,21~,14~,8,2,1") && r.extracted == Ordinary{7, 4, 3} &&
           l == std::vector<int>{1, 0, 1, 1, 0, 0, 0} && e == std::vector<int>{1, 1, 1, 1, 0, 0, 0} &&
           rr == std::vector<int>{1, 2, 3, 4, 7};
  });
  ck("E example (2) (printed 9 in one place; sum forces 8)", [&](std::string& d) {
    auto r = algoE(P("33,31,28,28,21~,21,15,9,7,1"), a4);
    d = to_string(r.reduced) + " " + to_string(r.extracted);
    return r.reduced == P("19,17,14~,8,2,1") && r.extracted == Ordinary{6, 6, 4, 3};
  });
  ck("F example (3) inverts (2) (8 for 9)", [&](std::string& d) {
    return same(d, to_string(algoF(P("19,17,14~,8,2,1"), {6, 6, 4, 3}, a4)), "(33,31,28,28,21~,21,15,9,7,1)");
  });
  ck("Theta example (4) (printed 16; size forces 15)", [&](std::string& d) {
    auto y = P("33,31,28~,28~,21,21,15,9,7,1");
    auto z = theta(y, a4);
    d = to_string(z);
    return z == P("47,45,42~,28~,15,9,8") && size(z) == 194 && theta_inv(z, a4) == y;
  });
  ck("D' on the Theta image", [&](std::string& d) {
    auto r = algoDprime(P("47,45,42~,28~,15,9,8"), a4);
    d = to_string(r.reduced) + " " + to_string(r.extracted);
    return r.reduced == P("26,24,21~,14~,8,2,1") && r.extracted == Ordinary{3, 3, 3, 2, 1, 1, 1};
  });
  ck("D2 n+1=3: product coefficient of t^4 is 2", [&](std::string& d) {
    auto s = product_series(make_config(Family::D2, 3, Weight::L0), 4);
    d = std::to_string(s[4]);
    return s[4] == 2;
  });
  return ck.out;
}

}  // namespace yw
