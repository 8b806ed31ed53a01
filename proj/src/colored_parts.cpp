#include <cctype>
#include <charconv>

#include "yw/colored.hpp"
#include "yw/error.hpp"

namespace yw {

Part subtract(Part a, Part b) {
  // equal values with opposite bars collapse to 0 in either order
  if (a.v < b.v) throw DomainError("subtract: " + to_string(b) + " exceeds " + to_string(a));
  return Part(a.v - b.v, a.bar != b.bar);
}

Part add(Part a, Part b) { return Part(a.v + b.v, a.bar != b.bar); }

Part scalar_mul(int k, Part x) {
  if (k < 0) throw InvalidArgument("scalar_mul: negative multiplier");
  return Part(k * x.v, x.bar);
}

std::string to_string(Part p) { return std::to_string(p.v) + (p.bar ? "~" : ""); }

Part parse_part(const std::string& token) {
  std::size_t b = 0, e = token.size();
  while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
  bool bar = e > b && token[e - 1] == '~';
  if (bar) --e;
  while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data() + b, token.data() + e, v);
  if (b == e || ec != std::errc() || ptr != token.data() + e || v < 0)
    throw InvalidArgument("bad part token '" + token + "'");
  return Part(v, bar);
}

}  // namespace yw
