#pragma once

#include <string>
#include <vector>

#include "yw/config.hpp"
#include "yw/partition.hpp"

namespace yw {

struct Reduction {
  Partition reduced;
  Ordinary extracted;
};

Partition left_insert(int e, int j, const Partition& y);
Partition right_insert(int kU, int j, const Partition& y);

// Algorithm A: Z \ AO1 -> AO1 x P, scale U.
Reduction algoA(const Partition& y, const Config& c);
Partition algoA_inv(const Partition& reduced, const Ordinary& lambda, const Config& c);

struct RoundInfo {
  int lambda_hat, t, a;
};

// Algorithm B: Z \ AO2 -> AO2 x P, scale U.
Reduction algoB(const Partition& y, const Config& c, std::vector<RoundInfo>* rounds = nullptr);
Partition algoB_inv(const Partition& reduced, const Ordinary& lambda, const Config& c);

// Algorithm C (B1, D1): AO2 -> S' x O, scale z1.
Reduction algoC(const Partition& y, const Config& c, std::vector<RoundInfo>* rounds = nullptr);
Partition algoC_inv(const Partition& reduced, const Ordinary& odd, const Config& c);
bool in_Sprime(const Partition& y, const Config& c);

// Algorithm D (D2): AO4 -> (no odd multiple of V) x O, scale V.
Reduction algoD(const Partition& mu, const Config& c);
Partition algoD_inv(const Partition& reduced, const Ordinary& odd, const Config& c);

// Codings of U-components.
Partition p_o(const Partition& y, const Config& c);
Partition p_o_inv(const Partition& y, const Config& c);  // throws DomainError if not an image
Partition p_s(const Partition& y, const Config& c);
Partition p_s_inv(const Partition& y, const Config& c);
bool in_AO1o(const Partition& y, const Config& c);
// Target set of E and D': T = { Y in AO2 : P^s(Y) in AO1 } (AO4 in place of AO2 for D2).
bool in_T(const Partition& y, const Config& c);

struct ModularDiagram {
  int t = 0, e = 0;
  std::vector<int> l, eps, r;  // index 0..e
  Partition rows;              // non-column parts of the coded input
  Partition reduced;           // Y'
};

Partition algoEprime(const Partition& y, const Config& c);
ModularDiagram modular_diagram(const Partition& y, const Partition& yprime, const Config& c);
// mu[i] for 1 <= i <= t (mu[0] unused).
std::vector<int> mu_formula(const ModularDiagram& d);
std::vector<int> mu_walk(const ModularDiagram& d, const Partition& y, const Config& c);
Ordinary lambda_from_mu(const std::vector<int>& mu);

// E on AO1o; lambda_1 <= l(Y').
Reduction algoE(const Partition& y, const Config& c, ModularDiagram* diag = nullptr);
Partition algoF(const Partition& yprime, const Ordinary& lambda, const Config& c);

// D' on AO2 (AO4 for D2): Y = Y' + U*nu row-wise, l(nu) <= l(Y').
Reduction algoDprime(const Partition& y, const Config& c);
Partition algoDprime_inv(const Partition& yprime, const Ordinary& nu, const Config& c);

struct TraceStep {
  std::string label;
  Partition y;
  Ordinary lambda;
};

Partition theta(const Partition& y, const Config& c, std::vector<TraceStep>* trace = nullptr);
Partition theta_inv(const Partition& y, const Config& c, std::vector<TraceStep>* trace = nullptr);

}  // namespace yw
