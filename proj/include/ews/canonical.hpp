#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ews/cases.hpp"
#include "ews/functions.hpp"

namespace ews {

// coeff * prod f^e over catalog function names; names absent from the catalog
// at degenerate parameters stand for the constant 1 and are simply omitted.
struct Monomial {
  Rat coeff = Rat(1);
  std::vector<std::pair<std::string, int>> powers;
};

Rat monomial_value(const CaseData& cd, const Monomial& mono, const GroupElement& g);
std::string monomial_to_string(const Monomial& mono);

struct TemplateEntry {
  int row = 0, col = 0;  // 1-based within the slice
  Monomial value;
};

struct SliceTemplate {
  std::string label;
  int factor = 0;             // tuple index the slice is cut from
  bool orbit_matrix = false;  // cut from the combined matrix instead
  int rows = 0, cols = 0;
  std::vector<int> col_index;          // 1-based source columns; empty = all
  std::vector<TemplateEntry> entries;  // unlisted positions are zero
};

std::vector<SliceTemplate> case_templates(const CaseData& cd);

// Extract the slice a template describes from the given tuple.
Mat template_slice(const CaseData& cd, const SliceTemplate& t, const GroupElement& g);

// g_new = left_u * g_old * right_h, with every left factor upper
// unitriangular and every right factor lying in the reduction subgroup.
struct TranscriptStep {
  std::string label;
  GroupElement left_u;
  GroupElement right_h;
};

struct CanonicalResult {
  GroupElement g;
  std::vector<TranscriptStep> steps;
  std::vector<Mat> slices;  // one per template, cut from the final tuple
};

// Reduce g to canonical slice form. Needs every function of the designated
// nonvanishing set nonzero at g; throws std::domain_error otherwise. Only the
// matrix cases (3..8) admit this reduction; others throw
// std::invalid_argument.
CanonicalResult reduce_to_canonical(const CaseData& cd, const GroupElement& g);

// Every slice entry must equal its template monomial evaluated at the
// original point.
CheckResult reconstruct_check(const CaseData& cd, const GroupElement& g, const CanonicalResult& res);

// Replay the transcript from g: multiplier shapes (unitriangular left, group
// membership both sides), invariance of all catalog values at every step, and
// agreement with the recorded final tuple.
CheckResult transcript_check(const CaseData& cd, const GroupElement& g, const CanonicalResult& res);

// Column pair (2m x 2, m >= 2) with unit symplectic pairing and nonzero
// bottom-left entry and trailing 2x2 minor: returns (u, u * p) with u upper
// unitriangular symplectic concentrating the pair on the last rows. Variant 1
// leaves a single entry in row 1, variant 2 in row 2.
std::pair<Mat, Mat> lemma4_reduce(const Mat& p, int variant);

}  // namespace ews
