#pragma once

#include <map>
#include <vector>

#include "ews/weights.hpp"

namespace ews {

// Fundamental-weight coefficients of a single factor or abstract root system.
using SimpleWeight = std::vector<Int>;

// Restriction constituents with multiplicities.
using BranchResult = std::map<SimpleWeight, Int>;

// Abstract simple type for dimension formulas; covers spin groups that have no
// matrix realization here (family is one of 'A','B','C','D').
struct RootSystem {
  char family;
  int rank;

  static RootSystem of(const FactorType& f);
};

// SL_{n+1} restricted to SL_n: every summand c_i pi_i splits independently as
// a_i pi_{i-1} + b_i pi_i with a_i + b_i = c_i, pi_0 = 0 and pi_n -> 0.
BranchResult branch_sl(int n, const SimpleWeight& lambda);

// Spin_{2k+1} restricted to Spin_2k, k >= 2: ordinary splits except the
// summand c_{k-1} pi_{k-1}, which becomes a pi_{k-2} + b (pi_{k-1} + pi_k).
BranchResult branch_spin_odd(int k, const SimpleWeight& lambda);

// Spin_{2k+2} restricted to Spin_{2k+1}, k >= 1: write lambda in the normal
// form sum c_i pi_i + d (pi_k + pi_{k+1}) with min(c_k, c_{k+1}) = 0; ordinary
// splits for i < k, both of pi_k, pi_{k+1} restrict to pi_k, and the diagonal
// part becomes a pi_{k-1} + 2b pi_k with a + b = d.
BranchResult branch_spin_even(int k, const SimpleWeight& lambda);

// Dimension of the irreducible module of highest weight lambda, by the Weyl
// product formula in epsilon coordinates.
Int weyl_dim(const RootSystem& rs, const SimpleWeight& lambda);

}  // namespace ews
