#include <cstdlib>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "yw/error.hpp"
#include "yw/series.hpp"
#include "yw/sets.hpp"
#include "yw/bijections.hpp"

using namespace yw;

namespace {

Config cfg(Family f, int r, Weight w = Weight::L0) { return make_config(f, r, w); }
SetSpec with(SetKind k, const Config& c) { return SetSpec{k, c, {}, 0}; }
SetSpec plain(SetKind k, int N = 0, std::vector<int> X = {}) { return SetSpec{k, std::nullopt, std::move(X), N}; }

std::vector<Config> small_configs() {
  return {cfg(Family::A2even, 1), cfg(Family::A2odd, 2), cfg(Family::A2odd, 2, Weight::L1),
          cfg(Family::B1, 2),     cfg(Family::B1, 2, Weight::L1), cfg(Family::B1, 2, Weight::Ln),
          cfg(Family::D1, 3),     cfg(Family::D1, 3, Weight::L1), cfg(Family::D1, 3, Weight::Ln1),
          cfg(Family::D1, 3, Weight::Ln), cfg(Family::D2, 3),     cfg(Family::D2, 3, Weight::Ln)};
}

}  // namespace

TEST_CASE("Z membership examples") {
  auto a4 = cfg(Family::A2odd, 4);
  // the coded form P^o(Y1) holds both 28 and 28~, so it is checked after decoding
  auto coded = parse_partition("33,31,28~,28,21~,21,15,9,7,1");
  CHECK_FALSE(in_Z(coded, a4));
  CHECK(in_Z(yw::p_o_inv(coded, a4), a4));
  CHECK(yw::in_AO1o(coded, a4));
  CHECK(in_Z({}, a4));
  auto d = cfg(Family::D2, 3);
  CHECK_FALSE(in_Z(parse_partition("5,5"), d));
  CHECK(in_Z(parse_partition("3,3"), d));
  CHECK_FALSE(in_Z(parse_partition("4~"), d));  // no bars for D2
  CHECK_FALSE(in_Z(parse_partition("7,7~"), a4));  // not in Pt
}

TEST_CASE("AO1 and AO2 membership examples") {
  auto a4 = cfg(Family::A2odd, 4);
  CHECK(in_AO1(parse_partition("33,31,28~,28~,21,21,15,9,7,1"), a4));
  CHECK(in_AO1({}, a4));
  CHECK_FALSE(in_AO1(parse_partition("7"), a4));  // smallest part must be below U
  CHECK(in_AO1(parse_partition("7~"), a4));
  CHECK(count(with(SetKind::AO1, cfg(Family::D2, 3)), 4) == 2);
  CHECK(in_AO2(parse_partition("31,17,15~,15~,13,7,5,3,3"), cfg(Family::B1, 3, Weight::Ln)));
  CHECK(in_AO2(parse_partition("47,45,42~,28~,15,9,8"), a4));
  CHECK_FALSE(in_AO2(parse_partition("7"), cfg(Family::A2even, 3)));
  // the printed image with 16 has size 195, not 194
  CHECK(size(parse_partition("47,45,42~,28~,16,9,8")) == 195);
}

TEST_CASE("classical membership examples") {
  std::vector<int> all{1, 2, 3, 4, 5, 6};
  CHECK_FALSE(in_classical({20, 13, 11, 7, 5, 3}, 2, 7, all));
  CHECK(in_classical({}, 1, 7, all));
  CHECK(count(plain(SetKind::AO1N, 5, {1, 3}), 12) == count(plain(SetKind::AO2N, 5, {1, 3}), 12));
}

TEST_CASE("small enumerations") {
  CHECK(count(plain(SetKind::Overpartitions), 3) == 8);
  CHECK(count(plain(SetKind::Strict), 9) == 8);
  auto e = enumerate(with(SetKind::AO1, cfg(Family::D2, 3)), 0);
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());
  auto over = enumerate(plain(SetKind::Overpartitions), 3);
  std::set<std::string> got;
  for (auto& p : over) got.insert(to_string(p));
  CHECK(got == std::set<std::string>{"(3)", "(3~)", "(2,1)", "(2~,1)", "(2,1~)", "(2~,1~)", "(1,1,1)", "(1,1,1~)"});
}

TEST_CASE("enumerators agree with brute-force filtering") {
  for (auto& c : small_configs())
    for (int m = 0; m <= 10; ++m) {
      auto all = oracle::all_sequences(m, true);
      for (auto k : {SetKind::Z, SetKind::AO1, SetKind::AO2}) {
        SetSpec s = with(k, c);
        std::int64_t brute = 0;
        for (auto& p : all) brute += contains(s, p);
        CHECK(count(s, m) == brute);
      }
    }
}

TEST_CASE("canonical order, no duplicates, members satisfy the predicate") {
  auto c = cfg(Family::B1, 2, Weight::Ln);
  for (auto k : {SetKind::Z, SetKind::AO1, SetKind::AO2}) {
    auto e = enumerate(with(k, c), 12);
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(contains(with(k, c), e[i]));
      if (i) CHECK(std::lexicographical_compare(e[i].begin(), e[i].end(), e[i - 1].begin(), e[i - 1].end()));
    }
  }
}

TEST_CASE("AO1 and AO2 lie in Z") {
  for (auto& c : small_configs())
    for (int m = 0; m <= 14; ++m)
      for (auto k : {SetKind::AO1, SetKind::AO2})
        for (auto& y : enumerate(with(k, c), m)) CHECK(in_Z(y, c));
}

TEST_CASE("D2 AO2 is strict; A2even AO2 is strict avoiding U") {
  auto d = cfg(Family::D2, 3);
  auto a = cfg(Family::A2even, 2);
  for (int m = 0; m <= 16; ++m) {
    CHECK(count(with(SetKind::AO2, d), m) == oracle::strict_count(m));
    CHECK(count(with(SetKind::AO2, a), m) == oracle::strict_count(m, a.U));
  }
}

TEST_CASE("AO1 and AO2 counts match the product formula") {
  for (auto& c : small_configs()) {
    auto prod = oracle::product_coeffs(14, [&](int i) { return kappa(c, i); });
    for (int m = 0; m <= 14; ++m) {
      CHECK(count(with(SetKind::AO1, c), m) == prod[m]);
      CHECK(count(with(SetKind::AO2, c), m) == prod[m]);
    }
  }
}

TEST_CASE("restricted sets") {
  auto c = cfg(Family::A2odd, 3);
  SetSpec a{SetKind::AO1X, c, {1, 3}, 0}, b{SetKind::AO2X, c, {1, 3}, 0};
  for (int m = 0; m <= 12; ++m) CHECK(count(a, m) == count(b, m));
  CHECK(contains(a, parse_partition("5,1")));    // 5 is a multiple of U
  CHECK_FALSE(contains(b, parse_partition("5,1")));
  CHECK(contains(b, parse_partition("5~,1")));
  CHECK_FALSE(contains(a, parse_partition("2")));
  CHECK_THROWS_AS(validate(SetSpec{SetKind::AO1X, c, {5}, 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(SetSpec{SetKind::AO1X, c, {3, 1}, 0}), InvalidArgument);
  CHECK_THROWS_AS(validate(SetSpec{SetKind::AO1X, std::nullopt, {1}, 0}), InvalidArgument);
}

TEST_CASE("classical identities at small N") {
  for (int N = 2; N <= 4; ++N)
    for (int mask = 1; mask < (1 << (N - 1)); ++mask) {
      std::vector<int> X;
      for (int x = 1; x < N; ++x)
        if (mask >> (x - 1) & 1) X.push_back(x);
      for (int m = 0; m <= 12; ++m)
        CHECK(count(plain(SetKind::AO1N, N, X), m) == count(plain(SetKind::AO2N, N, X), m));
    }
  CHECK_THROWS_AS(validate(plain(SetKind::AO3N, 2, {4})), InvalidArgument);
}

TEST_CASE("resource guard") {
  setenv("YW_MAX_SPACE", "50", 1);
  CHECK_THROWS_AS(count(plain(SetKind::Overpartitions), 12), ResourceError);
  setenv("YW_MAX_SPACE", "junk", 1);
  CHECK_THROWS_AS(count(plain(SetKind::Strict), 3), InvalidArgument);
  unsetenv("YW_MAX_SPACE");
  CHECK(count(plain(SetKind::Overpartitions), 3) == 8);
}
