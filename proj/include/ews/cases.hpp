#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ews/groups.hpp"
#include "ews/semigroup.hpp"
#include "ews/weights.hpp"

namespace ews {

// Free sizes of a case; fields that a case does not use must stay 0.
struct CaseParams {
  int n = 0;
  int m = 0;
  int l = 0;
};

// One highest-weight function from the case's catalog: an exact polynomial
// (or Laurent) expression in the factor entries together with its extended
// weight (lambda, chi).  chi counts multiples of the case's basis character.
struct WeightFunction {
  std::string name;
  ExtendedWeight weight;
  std::function<Rat(const GroupElement&)> eval;
};

// Polynomial identity between catalog expressions, e.g. a degenerate function
// collapsing to a constant at the smallest size.  Both sides carry the same
// extended weight; `sides` returns (lhs, rhs) at a point.
struct Relation {
  std::string text;
  ExtendedWeight lhs_weight, rhs_weight;
  std::function<std::pair<Rat, Rat>(const GroupElement&)> sides;
};

// Random element of H together with the value of the basis character chi_0 at
// it (1 whenever H has none, or when only H_0 was requested).
struct SubgroupSample {
  GroupElement h;
  Rat chi0 = Rat(1);
};

// Data for the divisibility-based irreducibility test: `gen`'s weight splits
// inside Z only through `divisor`'s weight, and at `witness` the divisor
// vanishes while the generator does not.
struct A2Config {
  std::string gen;
  std::string divisor;
  GroupElement witness;
};

struct CaseData {
  int id = 0;
  std::string description;
  GroupShape shape;
  CaseParams params;

  std::vector<WeightFunction> functions;
  // Names of functions whose nonvanishing cuts out the dense-orbit domain.
  std::vector<std::string> m_set;
  // Presentation of Z: lattice generators and semigroup generators by name
  // (empty for the two diagonal cases, whose semigroup is free on the table).
  std::vector<std::string> lattice;
  std::vector<std::string> semigroup;
  std::vector<Relation> relations;
  std::vector<A2Config> a2;

  // (factor index, corner width k): factor is Sp of its size with the central
  // Sp embedded in rows/cols k+1..size-k; the corner 2k coordinates carry the
  // diagonal SL_2/Sp_2 copies.
  std::vector<std::pair<int, int>> central_sp;

  std::function<SubgroupSample(Rng&, bool /*h0_only*/)> sample_h;

  // Generators of the extended weight semigroup as published in the table.
  std::vector<ExtendedWeight> table_generators;
};

int num_cases();

// Validates the sizes for the case; optionally explains the failure.
bool params_valid(int case_id, const CaseParams& p, std::string* why = nullptr);

// The parameter grid exercised by the test suite (small sizes, all
// constraints respected).
std::vector<CaseParams> case_grid(int case_id);

// Builds the full catalog; throws std::invalid_argument on bad sizes.
CaseData make_case(int case_id, const CaseParams& p);

// Z-presentation assembled from the named catalog entries (table generators
// as a free semigroup for the diagonal cases 1 and 2).
SemigroupPresentation case_presentation(const CaseData& cd);

const WeightFunction& find_function(const CaseData& cd, const std::string& name);
bool has_function(const CaseData& cd, const std::string& name);

// Matrix of the defining copy of the smaller group inside the bigger one for
// the two diagonal cases: diag(P, 1) for SL_n < SL_{n+1}, and the stabilizer
// embedding SO_n < SO_{n+1} otherwise.
Mat diag_case_embed(int case_id, int n, const Mat& p);

// The orbit map input for the function catalogs of cases 1, 2 and 6:
// R = Q * embed(P)^{-1} for cases 1 and 2, R = P * embed(Q)^{-1} for case 6.
Mat case_r_matrix(const CaseData& cd, const GroupElement& g);

}  // namespace ews
