#include "doctest.h"
#include "yw/config.hpp"
#include "yw/error.hpp"

using namespace yw;

TEST_CASE("table rows") {
  auto a = make_config(Family::A2even, 4, Weight::L0);
  CHECK(a.z1 == 0);
  CHECK(a.z2 == 0);
  CHECK(a.z3 == 9);
  CHECK(a.U == 9);
  CHECK(a.V == 9);
  CHECK(a.Delta == 9);
  CHECK(a.eps == 1);

  auto b = make_config(Family::B1, 3, Weight::Ln);
  CHECK((b.z1 == 3 && b.z2 == 6 && b.z3 == 3));
  CHECK((b.U == 6 && b.V == 6 && b.Delta == 6));
  CHECK((b.eps == 1 && b.eps_tilde == 1));

  auto d = make_config(Family::D2, 3, Weight::L0);
  CHECK(d.n == 2);
  CHECK((d.z1 == 0 && d.z2 == 0 && d.z3 == 3));
  CHECK((d.U == 6 && d.V == 3 && d.Delta == 6 && d.eps == 2));

  auto b0 = make_config(Family::B1, 3, Weight::L0);
  CHECK((b0.z1 == 6 && b0.z2 == 0 && b0.z3 == 3 && b0.eps_tilde == 2));
  auto d1 = make_config(Family::D1, 4, Weight::Ln1);
  CHECK((d1.z1 == 3 && d1.z3 == 3 && d1.U == 6 && d1.V == 3));
  auto ao = make_config(Family::A2odd, 4, Weight::L1);
  CHECK((ao.z1 == 7 && ao.z3 == 7 && ao.U == 7 && ao.V == 7));
}

TEST_CASE("U and Delta agree; V divides U") {
  for (auto f : {Family::A2even, Family::A2odd, Family::B1, Family::D1, Family::D2})
    for (int r = 3; r <= 8; ++r) {
      auto c = make_config(f, r, Weight::L0);
      CHECK(c.U == c.Delta);
      CHECK(c.U % c.V == 0);
      if (f == Family::D1 || f == Family::D2) CHECK(c.U == 2 * c.V);
    }
}

TEST_CASE("identical parameters for weights with the same row") {
  auto a = make_config(Family::A2odd, 3, Weight::L0), b = make_config(Family::A2odd, 3, Weight::L1);
  CHECK((a.z1 == b.z1 && a.z2 == b.z2 && a.z3 == b.z3 && a.U == b.U));
  CHECK(b.weight == Weight::L1);
}

TEST_CASE("rank ranges and warnings") {
  CHECK_THROWS_AS(make_config(Family::A2even, 0, Weight::L0), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::A2odd, 1, Weight::L0), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::B1, 1, Weight::L0), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::D1, 2, Weight::L0), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::D2, 2, Weight::L0), InvalidArgument);
  CHECK_FALSE(make_config(Family::A2odd, 2, Weight::L0).warning.empty());
  CHECK(make_config(Family::A2odd, 3, Weight::L0).warning.empty());
  CHECK_FALSE(make_config(Family::D1, 3, Weight::L0).warning.empty());
  CHECK(make_config(Family::D2, 3, Weight::L0).warning.empty());
}

TEST_CASE("weights must be level 1 for the family") {
  CHECK_THROWS_AS(make_config(Family::A2even, 2, Weight::L1), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::D2, 3, Weight::L1), InvalidArgument);
  CHECK_THROWS_AS(make_config(Family::B1, 3, Weight::Ln1), InvalidArgument);
  CHECK_NOTHROW(make_config(Family::D1, 4, Weight::Ln1));
  CHECK_NOTHROW(make_config("D2", 3, "Ln"));
  CHECK_THROWS_AS(make_config("E8", 3, "L0"), InvalidArgument);
  CHECK_THROWS_AS(make_config("B1", 3, "L7"), InvalidArgument);
}
