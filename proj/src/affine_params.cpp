#include "yw/config.hpp"
#include "yw/error.hpp"

namespace yw {

namespace {

bool weight_allowed(Family f, Weight w) {
  switch (f) {
    case Family::A2even: return w == Weight::L0;
    case Family::A2odd: return w == Weight::L0 || w == Weight::L1;
    case Family::B1: return w != Weight::Ln1;
    case Family::D1: return true;
    case Family::D2: return w == Weight::L0 || w == Weight::Ln;
  }
  return false;
}

}  // namespace

Config make_config(Family f, int rank, Weight w) {
  if (!weight_allowed(f, w))
    throw InvalidArgument("weight " + to_string(w) + " is not level 1 for " + to_string(f));
  Config c{};
  c.family = f;
  c.weight = w;
  c.rank = rank;
  c.n = f == Family::D2 ? rank - 1 : rank;
  int n = c.n;
  int min_n = 0;
  switch (f) {
    case Family::A2even:
      min_n = 1;
      c.z1 = 0, c.z2 = 0, c.z3 = 2 * n + 1, c.U = c.V = 2 * n + 1;
      break;
    case Family::A2odd:
      min_n = 2;
      c.z1 = 2 * n - 1, c.z2 = 0, c.z3 = 2 * n - 1, c.U = c.V = 2 * n - 1;
      if (n < 3) c.warning = "A2odd below rank 3";
      break;
    case Family::B1:
      min_n = 2;
      if (w == Weight::Ln)
        c.z1 = n, c.z2 = 2 * n, c.z3 = n;
      else
        c.z1 = 2 * n, c.z2 = 0, c.z3 = n;
      c.U = c.V = 2 * n;
      if (n < 3) c.warning = "B1 below rank 3";
      break;
    case Family::D1:
      min_n = 3;
      c.z1 = n - 1, c.z2 = 0, c.z3 = n - 1, c.U = 2 * n - 2, c.V = n - 1;
      if (n < 4) c.warning = "D1 below rank 4";
      break;
    case Family::D2:
      min_n = 2;
      c.z1 = 0, c.z2 = 0, c.z3 = n + 1, c.U = 2 * n + 2, c.V = n + 1;
      break;
  }
  if (n < min_n) {
    int shown = f == Family::D2 ? min_n + 1 : min_n;
    throw InvalidArgument("rank " + std::to_string(rank) + " out of range for " + to_string(f) +
                          " (minimum " + std::to_string(shown) + ")");
  }
  c.Delta = c.U;
  c.eps = f == Family::D2 ? 2 : 1;
  c.eps_tilde = (f == Family::B1 && w != Weight::Ln) ? 2 : 1;
  return c;
}

Config make_config(const std::string& family, int rank, const std::string& weight) {
  return make_config(parse_family(family), rank, parse_weight(weight));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A2even: return "A2even";
    case Family::A2odd: return "A2odd";
    case Family::B1: return "B1";
    case Family::D1: return "D1";
    case Family::D2: return "D2";
  }
  return "?";
}

std::string to_string(Weight w) {
  switch (w) {
    case Weight::L0: return "L0";
    case Weight::L1: return "L1";
    case Weight::Ln1: return "Ln-1";
    case Weight::Ln: return "Ln";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto f : {Family::A2even, Family::A2odd, Family::B1, Family::D1, Family::D2})
    if (s == to_string(f)) return f;
  throw InvalidArgument("unknown family '" + s + "'");
}

Weight parse_weight(const std::string& s) {
  for (auto w : {Weight::L0, Weight::L1, Weight::Ln1, Weight::Ln})
    if (s == to_string(w)) return w;
  throw InvalidArgument("unknown weight '" + s + "'");
}

}  // namespace yw
