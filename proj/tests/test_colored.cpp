#include <vector>

#include "doctest.h"
#include "yw/colored.hpp"
#include "yw/error.hpp"

using yw::Part;
using yw::barred;

TEST_CASE("order: x > x~ > x-1") {
  CHECK(Part(2) > barred(2));
  CHECK(barred(1) == barred(1));
  CHECK(Part(0) < barred(1));
  CHECK(barred(3) > Part(2));
  CHECK(Part(0, true) == Part(0));
}

TEST_CASE("order is total and transitive on small values") {
  std::vector<Part> all;
  for (int v = 0; v <= 200; ++v) {
    if (v) all.push_back(barred(v));
    all.push_back(Part(v));
  }
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(all[i] < all[i + 1]);
    // exactly one of <, ==, > holds
    int n = (all[i] < all[i + 1]) + (all[i] == all[i + 1]) + (all[i] > all[i + 1]);
    CHECK(n == 1);
  }
}

TEST_CASE("colored subtraction") {
  CHECK(yw::subtract(barred(3), Part(2)) == barred(1));
  CHECK(yw::subtract(barred(2), Part(2)) == Part(0));
  CHECK(yw::subtract(Part(5), Part(5)) == Part(0));
  CHECK(yw::subtract(Part(2), barred(2)) == Part(0));
  CHECK(yw::subtract(barred(7), barred(3)) == Part(4));
  CHECK_THROWS_AS(yw::subtract(Part(2), Part(3)), yw::DomainError);
  CHECK_THROWS_AS(yw::subtract(barred(2), barred(3)), yw::DomainError);
}

TEST_CASE("colored addition and scalar multiple") {
  CHECK(yw::add(barred(3), Part(2)) == barred(5));
  CHECK(yw::add(barred(2), Part(0)) == barred(2));
  CHECK(yw::add(Part(4), Part(3)) == Part(7));
  CHECK(yw::scalar_mul(2, barred(2)) == barred(4));
  CHECK(yw::scalar_mul(0, barred(7)) == Part(0));
  CHECK(yw::scalar_mul(3, Part(7)) == Part(21));
  for (int k = 0; k < 20; ++k)
    CHECK(yw::scalar_mul(k + 1, barred(3)).v == yw::scalar_mul(k, barred(3)).v + 3);
}

TEST_CASE("add then subtract round-trips values") {
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= a; ++b)
      for (int ab = 0; ab < 2; ++ab)
        for (int bb = 0; bb < 2; ++bb) {
          Part x(a, ab), y(b, bb);
          if (x < y) continue;
          Part d = yw::subtract(x, y);
          CHECK(yw::add(d, y).v == x.v);
        }
}

TEST_CASE("text form") {
  CHECK(yw::to_string(barred(28)) == "28~");
  CHECK(yw::to_string(Part(5)) == "5");
  CHECK(yw::parse_part(" 28~ ") == barred(28));
  CHECK(yw::parse_part("7") == Part(7));
  CHECK_THROWS_AS(yw::parse_part("x"), yw::InvalidArgument);
  CHECK_THROWS_AS(yw::parse_part("-3"), yw::InvalidArgument);
}
