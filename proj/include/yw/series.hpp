#pragma once

#include <cstdint>
#include <vector>

#include "yw/config.hpp"

namespace yw {

// Exact integer series truncated at degree M; arithmetic is overflow-checked.
class Series {
 public:
  explicit Series(int max_degree);
  static Series one(int max_degree);

  int max_degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int d) const { return c_.at(d); }
  std::int64_t& at(int d) { return c_.at(d); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  Series operator*(const Series& o) const;
  Series operator+(const Series& o) const;
  // Multiply in place by (1 + t^i).
  void mul_one_plus(int i);
  // Multiply in place by 1/(1 - t^i).
  void div_one_minus(int i);

 private:
  std::vector<std::int64_t> c_;
};

int kappa(const Config& c, int i);
Series product_series(const Config& c, int M);

// Count helpers used by the identity checks.
std::int64_t partition_count(int k);
std::int64_t strict_count(int k, int avoid_mod = 0);

}  // namespace yw
