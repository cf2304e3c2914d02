#include "ews/report.hpp"

#include <stdexcept>

#include "ews/functions.hpp"

namespace ews {

namespace {

Json check_json(const CheckResult& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) j["detail"] = r.detail;
  return j;
}

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

}  // namespace

Json weight_json(const Weight& w) {
  Json j;
  for (size_t f = 0; f < w.c.size(); ++f) {
    Json arr = Json::array();
    for (const auto& x : w.c[f]) arr.push_back(x.get_si());
    j[std::to_string(f)] = arr;
  }
  return j;
}

Json extended_weight_json(const ExtendedWeight& w) {
  Json j = weight_json(w.w);
  j["char"] = w.chi.get_si();
  return j;
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json group_json(const GroupElement& g) {
  Json arr = Json::array();
  for (const auto& m : g.g) arr.push_back(mat_json(m));
  return arr;
}

std::string weight_tsv(const Weight& w) {
  std::string s;
  for (size_t f = 0; f < w.c.size(); ++f) {
    if (f) s += ";";
    s += join_ints(w.c[f]);
  }
  return s;
}

Json table_report(const CaseData& cd) {
  Json j;
  j["schema"] = 1;
  j["command"] = "table";
  j["case"] = cd.id;
  j["params"] = {{"n", cd.params.n}, {"m", cd.params.m}, {"l", cd.params.l}};
  j["description"] = cd.description;
  Json gens = Json::array();
  for (const auto& w : cd.table_generators) gens.push_back(extended_weight_json(w));
  j["generators"] = gens;
  j["count"] = cd.table_generators.size();
  if (!cd.lattice.empty() || !cd.semigroup.empty()) {
    j["presentation"] = {{"lattice", cd.lattice}, {"semigroup", cd.semigroup}};
  }
  return j;
}

std::string table_tsv(const CaseData& cd) {
  std::string s = "# schema 1\n";
  for (const auto& w : cd.table_generators) s += weight_tsv(w.w) + "\t" + to_string(w.chi) + "\n";
  return s;
}

Json branch_report(int case_id, int n, const SimpleWeight& lambda, bool& ok) {
  Json j;
  j["schema"] = 1;
  j["command"] = "branch";
  j["case"] = case_id;
  j["n"] = n;
  BranchResult br;
  RootSystem big{'A', 1}, small{'A', 1};
  if (case_id == 1) {
    if (n < 2) throw std::invalid_argument("the SL chain needs n >= 2");
    if ((int)lambda.size() != n)
      throw std::invalid_argument("lambda needs " + std::to_string(n) + " coefficients");
    br = branch_sl(n, lambda);
    big = {'A', n};
    small = {'A', n - 1};
    j["chain"] = "SL_" + std::to_string(n + 1) + " -> SL_" + std::to_string(n);
  } else if (case_id == 2) {
    if (n < 3) throw std::invalid_argument("the Spin chain needs n >= 3");
    int k = n / 2;
    if (n % 2 == 0) {
      if ((int)lambda.size() != k)
        throw std::invalid_argument("lambda needs " + std::to_string(k) + " coefficients");
      br = branch_spin_odd(k, lambda);
      big = {'B', k};
      small = {'D', k};
    } else {
      if ((int)lambda.size() != k + 1)
        throw std::invalid_argument("lambda needs " + std::to_string(k + 1) + " coefficients");
      br = branch_spin_even(k, lambda);
      big = {'D', k + 1};
      small = {'B', k};
    }
    j["chain"] = "Spin_" + std::to_string(n + 1) + " -> Spin_" + std::to_string(n);
  } else {
    throw std::invalid_argument("branching chains exist for cases 1 and 2 only");
  }
  Json lam = Json::array();
  for (const auto& c : lambda) lam.push_back(c.get_si());
  j["lambda"] = lam;
  Int dim = weyl_dim(big, lambda);
  j["dimension"] = to_string(dim);
  Json cons = Json::array();
  Int sum = 0;
  for (const auto& [mu, mult] : br) {
    Json e;
    Json mw = Json::array();
    for (const auto& c : mu) mw.push_back(c.get_si());
    e["weight"] = mw;
    e["multiplicity"] = mult.get_si();
    Int d = weyl_dim(small, mu);
    e["dimension"] = to_string(d);
    sum += mult * d;
    cons.push_back(e);
  }
  j["constituents"] = cons;
  j["dimension_sum"] = to_string(sum);
  ok = (sum == dim);
  j["ok"] = ok;
  return j;
}

namespace {

DiagChain chain_for(int case_id, int n) {
  if (case_id == 1) {
    if (n < 2) throw std::invalid_argument("the SL chain needs n >= 2");
    return {DiagChain::Kind::sl_step, n};
  }
  if (case_id == 2) {
    if (n < 3) throw std::invalid_argument("the Spin chain needs n >= 3");
    return {DiagChain::Kind::spin_step, n};
  }
  throw std::invalid_argument("spectra exist for cases 1 and 2 only");
}

}  // namespace

Json spectrum_report(int case_id, int n, int degree_bound) {
  DiagChain chain = chain_for(case_id, n);
  std::vector<SpectrumEntry> entries = diag_spectrum(chain, degree_bound);
  Json j;
  j["schema"] = 1;
  j["command"] = "spectrum";
  j["case"] = case_id;
  j["n"] = n;
  j["degree_bound"] = degree_bound;
  Json es = Json::array();
  for (const auto& e : entries) {
    Json ej;
    ej["weight"] = weight_json(e.w);
    ej["multiplicity"] = e.mult.get_si();
    es.push_back(ej);
  }
  j["entries"] = es;
  Json ind = Json::array();
  for (const auto& w : indecomposables_up_to_degree(entries, degree_bound))
    ind.push_back(weight_json(w));
  j["indecomposables"] = ind;
  j["note"] = "indecomposables verified up to degree " + std::to_string(degree_bound);
  return j;
}

std::string spectrum_tsv(int case_id, int n, int degree_bound) {
  DiagChain chain = chain_for(case_id, n);
  std::string s = "# schema 1\n";
  for (const auto& e : diag_spectrum(chain, degree_bound))
    s += weight_tsv(e.w) + "\t" + to_string(e.mult) + "\n";
  return s;
}

Json irreducible_report(const CaseData& cd, bool& ok) {
  IrreducibilityReport rep = check_all_irreducible(cd);
  Json j;
  j["schema"] = 1;
  j["command"] = "irreducible";
  j["case"] = cd.id;
  j["params"] = {{"n", cd.params.n}, {"m", cd.params.m}, {"l", cd.params.l}};
  Json gens = Json::array();
  for (const auto& c : rep.certs) {
    Json cj;
    cj["name"] = c.name;
    cj["method"] = c.method;
    cj["ok"] = c.ok;
    cj["certificate"] = c.detail;
    gens.push_back(cj);
  }
  j["generators"] = gens;
  j["ok"] = rep.ok;
  ok = rep.ok;
  return j;
}

std::string irreducible_tsv(const CaseData& cd, bool& ok) {
  IrreducibilityReport rep = check_all_irreducible(cd);
  ok = rep.ok;
  std::string s = "# schema 1\n";
  for (const auto& c : rep.certs)
    s += c.name + "\t" + c.method + "\t" + (c.ok ? "irreducible" : "FAIL") + "\t" + c.detail + "\n";
  return s;
}

Json canonical_report(const CaseData& cd, uint64_t seed, bool& ok) {
  Rng rng(seed);
  GroupElement g = random_m_point(cd, rng);
  CanonicalResult res = reduce_to_canonical(cd, g);
  CheckResult rc = reconstruct_check(cd, g, res);
  CheckResult tc = transcript_check(cd, g, res);
  ok = rc.ok && tc.ok;

  Json j;
  j["schema"] = 1;
  j["command"] = "canonical";
  j["case"] = cd.id;
  j["params"] = {{"n", cd.params.n}, {"m", cd.params.m}, {"l", cd.params.l}};
  j["seed"] = seed;
  j["point"] = group_json(g);
  Json tmpl = Json::array();
  std::vector<SliceTemplate> ts = case_templates(cd);
  for (size_t s = 0; s < ts.size(); ++s) {
    Json tj;
    tj["label"] = ts[s].label;
    Json entries = Json::array();
    for (const auto& e : ts[s].entries) {
      Json ej;
      ej["row"] = e.row;
      ej["col"] = e.col;
      ej["value"] = monomial_to_string(e.value);
      entries.push_back(ej);
    }
    tj["entries"] = entries;
    tj["slice"] = mat_json(res.slices[s]);
    tmpl.push_back(tj);
  }
  j["slices"] = tmpl;
  Json steps = Json::array();
  for (const auto& st : res.steps) {
    Json sj;
    sj["label"] = st.label;
    sj["left"] = group_json(st.left_u);
    sj["right"] = group_json(st.right_h);
    steps.push_back(sj);
  }
  j["transcript"] = steps;
  j["checks"] = {{"reconstruct", check_json(rc)}, {"transcript", check_json(tc)}};
  j["ok"] = ok;
  return j;
}

std::string canonical_tsv(const CaseData& cd, uint64_t seed, bool& ok) {
  Rng rng(seed);
  GroupElement g = random_m_point(cd, rng);
  CanonicalResult res = reduce_to_canonical(cd, g);
  CheckResult rc = reconstruct_check(cd, g, res);
  CheckResult tc = transcript_check(cd, g, res);
  ok = rc.ok && tc.ok;
  std::vector<SliceTemplate> ts = case_templates(cd);
  std::string s = "# schema 1\n";
  for (size_t k = 0; k < ts.size(); ++k) {
    s += "# " + ts[k].label + "\n";
    const Mat& m = res.slices[k];
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (j) s += "\t";
        s += to_string(m.at(i, j));
      }
      s += "\n";
    }
  }
  return s;
}

Json verify_report(const CaseData& cd, int trials, uint64_t seed, bool& ok) {
  Rng rng(seed);
  ok = true;
  Json checks;

  {
    Json eq = Json::array();
    for (const auto& f : cd.functions) {
      CheckResult r = verify_equivariance(cd, f, rng, trials);
      Json fj = check_json(r);
      fj["name"] = f.name;
      eq.push_back(fj);
      ok = ok && r.ok;
    }
    checks["equivariance"] = eq;
  }
  {
    CheckResult r = verify_relations(cd, rng, trials);
    checks["relations"] = check_json(r);
    ok = ok && r.ok;
  }
  {
    CheckResult r = verify_left_u_invariance(cd, rng, trials);
    checks["left_unipotent"] = check_json(r);
    ok = ok && r.ok;
  }
  {
    CheckResult r = verify_right_h0_invariance(cd, rng, trials);
    checks["right_h0"] = check_json(r);
    ok = ok && r.ok;
  }
  if (!cd.central_sp.empty()) {
    CheckResult r = verify_central_invariance(cd, rng, trials);
    checks["central_factor"] = check_json(r);
    ok = ok && r.ok;
  }
  {
    int expect = (int)cd.table_generators.size();
    int got = rank_of_weights(cd.shape, cd.table_generators);
    Json rj;
    rj["ok"] = (got == expect);
    rj["rank"] = got;
    rj["generators"] = expect;
    checks["generator_rank"] = rj;
    ok = ok && (got == expect);
  }
  if (cd.id <= 2) {
    std::vector<ExtendedWeight> computed = case12_generators(cd.id, cd.params.n);
    bool match = computed.size() == cd.table_generators.size();
    if (match) {
      for (const auto& w : computed) {
        bool found = false;
        for (const auto& t : cd.table_generators) found = found || t == w;
        match = match && found;
      }
    }
    Json gj;
    gj["ok"] = match;
    gj["count"] = computed.size();
    gj["detail"] = "indecomposables computed from the degree-3 spectrum";
    checks["generator_table"] = gj;
    ok = ok && match;
  } else {
    {
      CheckResult agg;
      for (int t = 0; t < trials && agg.ok; ++t) {
        GroupElement g = random_m_point(cd, rng);
        CanonicalResult res = reduce_to_canonical(cd, g);
        CheckResult rc = reconstruct_check(cd, g, res);
        if (!rc.ok) agg = rc;
        CheckResult tc = transcript_check(cd, g, res);
        if (agg.ok && !tc.ok) agg = tc;
      }
      checks["canonical_reconstruction"] = check_json(agg);
      ok = ok && agg.ok;
    }
    {
      bool iok = true;
      IrreducibilityReport rep = check_all_irreducible(cd);
      iok = rep.ok;
      Json ij;
      ij["ok"] = iok;
      Json gens = Json::array();
      for (const auto& c : rep.certs) {
        Json cj;
        cj["name"] = c.name;
        cj["method"] = c.method;
        cj["ok"] = c.ok;
        gens.push_back(cj);
      }
      ij["generators"] = gens;
      checks["irreducibility"] = ij;
      ok = ok && iok;
    }
  }

  Json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["case"] = cd.id;
  j["params"] = {{"n", cd.params.n}, {"m", cd.params.m}, {"l", cd.params.l}};
  j["trials"] = trials;
  j["seed"] = seed;
  j["checks"] = checks;
  j["ok"] = ok;
  return j;
}

}  // namespace ews
