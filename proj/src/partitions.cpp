#include <algorithm>
#include <map>

#include "yw/error.hpp"
#include "yw/partition.hpp"

namespace yw {

int size(const Partition& p) {
  int s = 0;
  for (auto x : p) s += x.v;
  return s;
}

int size(const Ordinary& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

bool is_decreasing(const Partition& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

Partition concat(const Partition& a, const Partition& b) {
  Partition out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Partition reverse(const Partition& p) { return Partition(p.rbegin(), p.rend()); }

bool is_overpartition(const Partition& p) {
  if (!is_decreasing(p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].v <= 0) return false;
    if (i > 0 && p[i - 1].v == p[i].v && p[i - 1].bar) return false;
  }
  return true;
}

bool is_in_Pt(const Partition& p) {
  std::map<int, bool> seen;
  for (auto x : p) {
    auto [it, fresh] = seen.emplace(x.v, x.bar);
    if (!fresh && it->second != x.bar) return false;
  }
  return true;
}

Ordinary transpose(const Ordinary& p) {
  Ordinary t(p.empty() ? 0 : p[0], 0);
  for (int x : p)
    for (int j = 0; j < x; ++j) ++t[j];
  return t;
}

bool is_partition(const Ordinary& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i - 1] < p[i])) return false;
  return true;
}

bool is_strict(const Ordinary& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i - 1] <= p[i])) return false;
  return true;
}

bool is_odd(const Ordinary& p) {
  return is_partition(p) && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
}

Ordinary odd_to_strict(const Ordinary& odd) {
  if (!is_odd(odd)) throw DomainError("odd_to_strict: input is not an odd partition");
  // k copies of a become a*2^j for each bit j of k
  std::map<int, int> mult;
  for (int x : odd) ++mult[x];
  Ordinary out;
  for (auto [a, k] : mult)
    for (int j = 0; k >> j; ++j)
      if ((k >> j) & 1) out.push_back(a << j);
  std::sort(out.rbegin(), out.rend());
  return out;
}

Ordinary strict_to_odd(const Ordinary& strict) {
  if (!is_strict(strict)) throw DomainError("strict_to_odd: input is not a strict partition");
  Ordinary out;
  for (int x : strict) {
    int k = 1;
    while (x % 2 == 0) x /= 2, k *= 2;
    out.insert(out.end(), k, x);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Partition sorted(Partition p) {
  std::stable_sort(p.begin(), p.end(), [](Part a, Part b) {
    if (a.v != b.v) return a.v > b.v;
    return a.bar && !b.bar;
  });
  return p;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

std::string to_string(const Ordinary& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']') t += ch;
  std::vector<std::string> out;
  if (t.find_first_not_of(" \t\r\n") == std::string::npos) return out;
  std::size_t start = 0;
  for (;;) {
    auto pos = t.find(',', start);
    out.push_back(t.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Partition out;
  for (auto& tok : split_tokens(text)) {
    Part p = parse_part(tok);
    if (p.v == 0) continue;  // zero tail
    out.push_back(p);
  }
  // Ties may carry bars in either order: coded sequences list the barred copy first.
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1].v < out[i].v) throw InvalidArgument("partition '" + text + "' is not weakly decreasing");
  return out;
}

Ordinary parse_ordinary(const std::string& text) {
  Ordinary out;
  for (auto& tok : split_tokens(text)) {
    Part p = parse_part(tok);
    if (p.bar) throw InvalidArgument("ordinary partition cannot carry bars: '" + text + "'");
    if (p.v) out.push_back(p.v);
  }
  if (!is_partition(out)) throw InvalidArgument("'" + text + "' is not weakly decreasing");
  return out;
}

}  // namespace yw
