#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yw/config.hpp"
#include "yw/partition.hpp"

namespace yw {

enum class SetKind {
  Z, AO1, AO2,
  AO1X, AO2X,                      // restricted by residues mod z3
  AO1N, AO2N, AO3N, AO4N, AO5N,    // classical, parameter N
  Strict, StrictAvoiding, Odd, Overpartitions, Pt,
};

struct SetSpec {
  SetKind kind = SetKind::Z;
  std::optional<Config> cfg;
  std::vector<int> X;  // residue set for restricted and classical kinds
  int N = 0;           // classical modulus, or U for StrictAvoiding
};

// Alphabet and set predicates for a configuration.
bool in_alphabet(Part p, const Config& c);
bool repeatable(Part p, const Config& c);
bool congruent(Part p, const Config& c);
bool in_Z(const Partition& y, const Config& c);
bool in_AO1(const Partition& y, const Config& c);
bool in_AO2(const Partition& y, const Config& c);
// D2 only: Z with no part a multiple of U (the classical AO4 with all residues).
bool in_AO4(const Partition& y, const Config& c);
// Residue restriction mod z3; multiples of U are also admitted (barred only
// when `second`, i.e. on the AO2 side).
bool in_restricted(const Partition& y, const Config& c, const std::vector<int>& X, bool second);

// Classical sets on ordinary partitions. which in 1..5.
bool in_classical(const Ordinary& y, int which, int N, const std::vector<int>& X);

bool contains(const SetSpec& s, const Partition& y);
void validate(const SetSpec& s);

// All members of size m in canonical order (lexicographically decreasing under the part order).
std::vector<Partition> enumerate(const SetSpec& s, int m);
std::int64_t count(const SetSpec& s, int m);

// Search-node budget from YW_MAX_SPACE (default 200000000).
std::uint64_t max_space();

SetKind parse_set_kind(const std::string& s);
std::string to_string(SetKind k);

}  // namespace yw
