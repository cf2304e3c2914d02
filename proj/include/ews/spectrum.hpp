#pragma once

#include <vector>

#include "ews/branching.hpp"
#include "ews/weights.hpp"

namespace ews {

// One constituent of C[G]^H for a diagonal embedding L < L x K: the G-weight
// (mu, lambda*) with its branching multiplicity.
struct SpectrumEntry {
  Weight w;
  Int mult;
};

// Diagonal chain L < K: SL_n < SL_{n+1}, Spin_n < Spin_{n+1}, or the sanity
// mode L = K = SL_n (restriction is the identity).
struct DiagChain {
  enum class Kind { sl_step, spin_step, same_sl };
  Kind kind;
  int n;

  // Shape of G = L x K for weight bookkeeping (spin factors use the SO shape
  // of the same rank; only ranks matter here).
  GroupShape shape() const;
};

// All constituents (mu, lambda*) for dominant lambda of K with fundamental
// coefficient sum <= degree_bound, sorted by weight.
std::vector<SpectrumEntry> diag_spectrum(const DiagChain& chain, int degree_bound);

// Present nonzero weights that are not sums of two present nonzero weights.
// Every present nonzero weight has a nonzero K-part, so both halves of a split
// stay within the bound automatically.
std::vector<Weight> indecomposables_up_to_degree(const std::vector<SpectrumEntry>& entries,
                                                 int degree_bound);

// Generators of the extended weight semigroup for the two diagonal cases,
// computed from the spectrum: case 1 (SL_n x SL_{n+1} over SL_n x C^*)
// attaches the character multiples to the 2n indecomposables; case 2
// (Spin_n x Spin_{n+1} over Spin_n) has no characters.
std::vector<ExtendedWeight> case12_generators(int case_id, int n);

// All dominant coefficient vectors of the given rank with sum <= bound.
std::vector<SimpleWeight> enumerate_dominant(int rank, int bound);

}  // namespace ews
