#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "ews/canonical.hpp"
#include "ews/cases.hpp"
#include "ews/spectrum.hpp"

namespace ews {

using Json = nlohmann::ordered_json;

// {"0": [coeffs], "1": [coeffs], ..., "char": k}
Json weight_json(const Weight& w);
Json extended_weight_json(const ExtendedWeight& w);
// Arrays of exact "p/q" strings.
Json mat_json(const Mat& m);
Json group_json(const GroupElement& g);

std::string weight_tsv(const Weight& w);

// Generator listing with the parameter-dependent inclusion rules applied.
Json table_report(const CaseData& cd);
std::string table_tsv(const CaseData& cd);

// Restriction constituents along the case's chain (1: SL step, 2: Spin step)
// with the dimension cross-check; ok = dimensions balance.
Json branch_report(int case_id, int n, const SimpleWeight& lambda, bool& ok);

// Spectrum entries within the degree bound plus the indecomposables.
Json spectrum_report(int case_id, int n, int degree_bound);
std::string spectrum_tsv(int case_id, int n, int degree_bound);

// Per-generator irreducibility verdicts.
Json irreducible_report(const CaseData& cd, bool& ok);
std::string irreducible_tsv(const CaseData& cd, bool& ok);

// One seeded point reduced to canonical form: slices, templates, transcript
// and the two consistency checks.
Json canonical_report(const CaseData& cd, uint64_t seed, bool& ok);
std::string canonical_tsv(const CaseData& cd, uint64_t seed, bool& ok);

// Aggregated suites for one case; every applicable check with detail.
Json verify_report(const CaseData& cd, int trials, uint64_t seed, bool& ok);

}  // namespace ews
