#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace yw {

// A letter of the two-colored alphabet. Barred zero does not exist:
// any construction with value 0 is unbarred.
struct Part {
  int v = 0;
  bool bar = false;

  constexpr Part() = default;
  constexpr Part(int value, bool barred = false) : v(value), bar(barred && value != 0) {}

  // x > x~ > x-1 > ... ; larger key means larger in the order.
  constexpr int key() const { return v == 0 ? 0 : 2 * v + (bar ? 0 : 1); }

  friend constexpr bool operator==(Part a, Part b) { return a.v == b.v && a.bar == b.bar; }
  friend constexpr std::strong_ordering operator<=>(Part a, Part b) { return a.key() <=> b.key(); }
};

constexpr Part barred(int v) { return Part(v, true); }

// Colored difference; requires a.v >= b.v. Bar flag is c(a) - c(b) mod 2.
Part subtract(Part a, Part b);
Part add(Part a, Part b);
Part scalar_mul(int k, Part x);

std::string to_string(Part p);
// Accepts "N" or "N~", surrounding whitespace ignored.
Part parse_part(const std::string& token);

}  // namespace yw
