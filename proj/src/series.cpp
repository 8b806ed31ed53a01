#include "yw/series.hpp"

#include <vector>

#include "yw/error.hpp"

namespace yw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("series coefficient overflow");
  return r;
}

}  // namespace

Series::Series(int max_degree) {
  if (max_degree < 0) throw InvalidArgument("negative series degree");
  c_.assign(max_degree + 1, 0);
}

Series Series::one(int max_degree) {
  Series s(max_degree);
  s.c_[0] = 1;
  return s;
}

Series Series::operator*(const Series& o) const {
  int M = std::min(max_degree(), o.max_degree());
  Series r(M);
  for (int i = 0; i <= M; ++i)
    for (int j = 0; i + j <= M; ++j)
      if (c_[i] && o.c_[j]) r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
  return r;
}

Series Series::operator+(const Series& o) const {
  int M = std::min(max_degree(), o.max_degree());
  Series r(M);
  for (int i = 0; i <= M; ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
  return r;
}

void Series::mul_one_plus(int i) {
  if (i <= 0) throw InvalidArgument("mul_one_plus: degree must be positive");
  for (int d = max_degree(); d >= i; --d) c_[d] = checked_add(c_[d], c_[d - i]);
}

void Series::div_one_minus(int i) {
  if (i <= 0) throw InvalidArgument("div_one_minus: degree must be positive");
  for (int d = i; d <= max_degree(); ++d) c_[d] = checked_add(c_[d], c_[d - i]);
}

int kappa(const Config& c, int i) {
  if (i < 1) throw InvalidArgument("kappa: degree must be positive");
  int n = c.n;
  switch (c.family) {
    case Family::A2even: return i % c.U == 0 ? 0 : 1;
    case Family::A2odd:
    case Family::D2: return 1;
    case Family::B1:
      if (c.b1_ln()) return i % (2 * n) == n ? 2 : 1;
      return i % (2 * n) == 0 ? 2 : 1;
    case Family::D1: return i % (n - 1) == 0 ? 2 : 1;
  }
  return 1;
}

Series product_series(const Config& c, int M) {
  Series s = Series::one(M);
  for (int i = 1; i <= M; ++i)
    for (int k = kappa(c, i); k > 0; --k) s.mul_one_plus(i);
  return s;
}

std::int64_t partition_count(int k) {
  if (k < 0) return 0;
  Series s = Series::one(k);
  for (int i = 1; i <= k; ++i) s.div_one_minus(i);
  return s[k];
}

std::int64_t strict_count(int k, int avoid_mod) {
  if (k < 0) return 0;
  Series s = Series::one(k);
  for (int i = 1; i <= k; ++i)
    if (avoid_mod == 0 || i % avoid_mod != 0) s.mul_one_plus(i);
  return s[k];
}

}  // namespace yw
