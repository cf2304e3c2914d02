#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ews/weights.hpp"

namespace ews {

// Tuple of factor matrices, one per factor of G.
struct GroupElement {
  std::vector<Mat> g;

  static GroupElement identity(const GroupShape& shape);
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const { return g == o.g; }
};

// Deterministic generator-driven randomness.  Draws go through the raw
// mt19937_64 stream so identical seeds give identical elements everywhere.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  long draw(long lo, long hi);          // uniform-ish integer in [lo, hi]
  long draw_nonzero(long lo, long hi);  // same, excluding 0
  Rat rat_param();                      // small nonzero rational
};

// Defining equations of the factor: det 1 for SL; M^T Omega M = Omega for Sp;
// M^T F M = F and det 1 for SO.
bool check_invariant_form(const Mat& m, const FactorType& f);

// diag(V, (V^{-1})^#) with # the antitranspose; symplectic for invertible V.
Mat symplectic_type1(const Mat& v);

// [[E, C], [0, E]] (or its lower transpose) for C symmetric about the
// antidiagonal; symplectic.
Mat symplectic_type2(const Mat& c, bool lower = false);

// N x N identity with `small` placed at the given 1-based rows/columns.
Mat embed_at(int n, const std::vector<int>& idx1, const Mat& small);

// Sp_{2m-2k} into the middle block of Sp_2m (rows/cols k+1..2m-k).
Mat central_sp_embed(int two_m, const Mat& small);

// SO_m into SO_{m+1} as the stabilizer of an anisotropic vector, chosen so
// upper triangular maps to upper triangular and the torus extends by a 1.
Mat so_step_embed(const Mat& p);

// Product of `length` random generators of the factor (transvections for SL,
// type-1/2 blocks for Sp, root generators for SO), exact and generic.
Mat random_element(const FactorType& f, Rng& rng, int length);

// Same restricted to positive-root generators: upper unitriangular result.
Mat random_unipotent(const FactorType& f, Rng& rng, int length);

// Free torus parameters with small random rational values.
std::vector<Rat> random_torus_params(const FactorType& f, Rng& rng);

// True iff the first k and last k columns of Q have Gram matrix skew_form(2k)
// with respect to skew_form(rows of Q).
bool gram_columns_check(const Mat& q, int k);

}  // namespace ews
