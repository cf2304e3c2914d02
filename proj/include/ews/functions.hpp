#pragma once

#include <string>
#include <vector>

#include "ews/cases.hpp"

namespace ews {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

// Generic random elements with exact rational entries.
GroupElement random_group_element(const GroupShape& shape, Rng& rng);
GroupElement random_unipotent_element(const GroupShape& shape, Rng& rng);
TorusElement random_torus_element(const GroupShape& shape, Rng& rng);

Rat evaluate_function(const CaseData& cd, const std::string& name, const GroupElement& g);

// Samples g with f(g) != 0 (bounded resampling), unipotent u, torus t and
// h in H, then checks f(t^{-1} u^{-1} g h) == lambda(t) * chi0(h)^chi * f(g)
// exactly, `trials` times.
CheckResult verify_equivariance(const CaseData& cd, const WeightFunction& f, Rng& rng, int trials);
CheckResult verify_all_equivariance(const CaseData& cd, Rng& rng, int trials);

// Each catalog relation: identical weights on both sides, then exact numeric
// agreement at `trials` random points.
CheckResult verify_relations(const CaseData& cd, Rng& rng, int trials);

// Catalog values are unchanged by right multiplication by the centrally
// embedded Sp factors, and the corner/central coordinate split passes the
// Gram check on random symplectic elements.
CheckResult verify_central_invariance(const CaseData& cd, Rng& rng, int trials);

// Left unipotent multiplication alone never changes a catalog value; right
// multiplication by H_0 (character-free part) does not either.
CheckResult verify_left_u_invariance(const CaseData& cd, Rng& rng, int trials);
CheckResult verify_right_h0_invariance(const CaseData& cd, Rng& rng, int trials);

struct GeneratorCertificate {
  std::string name;
  std::string method;  // "a1" or "a2"
  bool ok = false;
  std::string detail;
};

struct IrreducibilityReport {
  bool ok = true;
  std::vector<GeneratorCertificate> certs;
};

// Certifies every presentation generator indecomposable: the split-free
// criterion first, the divisibility criterion (configured witness) where
// splits exist.
IrreducibilityReport check_all_irreducible(const CaseData& cd);

// Random g with every function of the nonvanishing set nonzero.  The cap
// covers the sparsest grids, where a draw clears all functions only a few
// percent of the time.
GroupElement random_m_point(const CaseData& cd, Rng& rng, int cap = 500);

}  // namespace ews
