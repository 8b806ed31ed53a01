#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yw/config.hpp"

namespace yw {

struct ReportRow {
  int m;
  std::int64_t lhs, rhs;
  bool pass;
  std::string note;
};

struct Report {
  std::string identity;
  std::string family, weight;
  int rank = 0;
  std::vector<ReportRow> results;
  bool pass = true;
};

// |AO1[m]| = |AO2[m]| = product coefficient. lhs = AO1, rhs = AO2; the
// product coefficient must equal both.
Report verify_counts(const Config& c, int M, int jobs = 1);
Report fock_identity(const Config& c, int M, int jobs = 1);
Report euler_identity(int M);
// Ten seeded residue sets; per m: sum over sets of |AO1^X| vs |AO2^X|.
Report restricted_identity(const Config& c, int M, int jobs = 1, unsigned seed = 20240521u);
// Classical AO1..AO5 families for N <= maxN.
Report classical_identity(int maxN12, int maxN345, int M, int jobs = 1);
// Theta is a size-preserving bijection AO1[m] -> AO2[m]; lhs = |AO1|, rhs = |image ∩ AO2| distinct.
Report theta_bijectivity(const Config& c, int M, int jobs = 1);

std::vector<std::vector<int>> sample_residue_sets(const Config& c, int count, unsigned seed);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};
std::vector<Check> selfcheck();

// Runs f(m) for m in [0, M] over up to `jobs` threads; results in order of m.
template <class F>
auto parallel_over_m(int M, int jobs, F f) -> std::vector<decltype(f(0))>;

}  // namespace yw

#include "yw/detail/parallel.hpp"
