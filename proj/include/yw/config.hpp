#pragma once

#include <string>

namespace yw {

enum class Family { A2even, A2odd, B1, D1, D2 };
enum class Weight { L0, L1, Ln1, Ln };  // Ln1 is Lambda_{n-1}

struct Config {
  Family family;
  Weight weight;
  int rank;  // as supplied; for D2 this is n+1
  int n;     // table parameter
  int z1, z2, z3;
  int U, V, Delta;
  int eps, eps_tilde;
  std::string warning;  // set below the standard minimal ranks

  bool b1_ln() const { return family == Family::B1 && weight == Weight::Ln; }
  // Families whose Theta uses the P^o / P^s recodings.
  bool uses_coding() const {
    return family == Family::A2odd || family == Family::D1 || (family == Family::B1 && !b1_ln());
  }
};

Config make_config(Family f, int rank, Weight w);
Config make_config(const std::string& family, int rank, const std::string& weight);

std::string to_string(Family f);
std::string to_string(Weight w);
Family parse_family(const std::string& s);
Weight parse_weight(const std::string& s);

}  // namespace yw
