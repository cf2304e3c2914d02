#include "ews/functions.hpp"

#include <sstream>
#include <stdexcept>

namespace ews {

namespace {

Rat chi_power(const Rat& base, const Int& e) {
  long ee = e.get_si();
  return rat_pow(base, ee);
}

std::string trial_tag(const std::string& what, int trial) {
  std::ostringstream os;
  os << what << " (trial " << trial << ")";
  return os.str();
}

}  // namespace

GroupElement random_group_element(const GroupShape& shape, Rng& rng) {
  GroupElement g;
  for (const auto& f : shape) g.g.push_back(random_element(f, rng, f.size + 3));
  return g;
}

GroupElement random_unipotent_element(const GroupShape& shape, Rng& rng) {
  GroupElement u;
  for (const auto& f : shape) u.g.push_back(random_unipotent(f, rng, f.size + 2));
  return u;
}

TorusElement random_torus_element(const GroupShape& shape, Rng& rng) {
  TorusElement t;
  for (const auto& f : shape) t.t.push_back(random_torus_params(f, rng));
  return t;
}

Rat evaluate_function(const CaseData& cd, const std::string& name, const GroupElement& g) {
  const WeightFunction& f = find_function(cd, name);
  Rat v = f.eval(g);
  return v;
}

GroupElement random_m_point(const CaseData& cd, Rng& rng, int cap) {
  for (int attempt = 0; attempt < cap; ++attempt) {
    GroupElement g = random_group_element(cd.shape, rng);
    bool good = true;
    for (const auto& name : cd.m_set) {
      Rat v = evaluate_function(cd, name, g);
      if (v == 0) { good = false; break; }
    }
    if (good) return g;
  }
  throw std::runtime_error("no point with all designated functions nonzero after resampling");
}

CheckResult verify_equivariance(const CaseData& cd, const WeightFunction& f, Rng& rng, int trials) {
  CheckResult res;
  for (int trial = 0; trial < trials; ++trial) {
    GroupElement g;
    Rat fg(0);
    bool found = false;
    for (int attempt = 0; attempt < 50; ++attempt) {
      g = random_group_element(cd.shape, rng);
      fg = f.eval(g);
      if (fg != 0) { found = true; break; }
    }
    if (!found) {
      res.ok = false;
      res.detail = f.name + ": could not find a nonvanishing point";
      return res;
    }
    GroupElement u = random_unipotent_element(cd.shape, rng);
    TorusElement t = random_torus_element(cd.shape, rng);
    SubgroupSample hs = cd.sample_h(rng, false);
    GroupElement moved;
    for (size_t k = 0; k < cd.shape.size(); ++k) {
      Mat tm = torus_matrix(cd.shape[k], t.t[k]);
      Mat m = tm.inverse() * u.g[k].inverse() * g.g[k] * hs.h.g[k];
      moved.g.push_back(m);
    }
    Rat lhs = f.eval(moved);
    Rat scale = eval_on_torus(cd.shape, f.weight.w, t);
    Rat chi = chi_power(hs.chi0, f.weight.chi);
    Rat rhs = scale * chi * fg;
    if (lhs != rhs) {
      res.ok = false;
      res.detail = trial_tag(f.name + ": transformed value does not match weight", trial);
      return res;
    }
  }
  return res;
}

CheckResult verify_all_equivariance(const CaseData& cd, Rng& rng, int trials) {
  for (const auto& f : cd.functions) {
    CheckResult r = verify_equivariance(cd, f, rng, trials);
    if (!r.ok) return r;
  }
  return CheckResult{};
}

CheckResult verify_relations(const CaseData& cd, Rng& rng, int trials) {
  CheckResult res;
  for (const auto& rel : cd.relations) {
    if (!(rel.lhs_weight == rel.rhs_weight)) {
      res.ok = false;
      res.detail = rel.text + ": weights of the two sides differ";
      return res;
    }
    for (int trial = 0; trial < trials; ++trial) {
      GroupElement g = random_group_element(cd.shape, rng);
      auto sides = rel.sides(g);
      if (sides.first != sides.second) {
        res.ok = false;
        res.detail = trial_tag(rel.text + ": sides disagree", trial);
        return res;
      }
    }
  }
  return res;
}

CheckResult verify_central_invariance(const CaseData& cd, Rng& rng, int trials) {
  CheckResult res;
  for (const auto& [factor, k] : cd.central_sp) {
    const FactorType& f = cd.shape[static_cast<size_t>(factor)];
    int small = f.size - 2 * k;
    for (int trial = 0; trial < trials; ++trial) {
      Mat q = random_element(f, rng, f.size + 3);
      if (!gram_columns_check(q, k)) {
        res.ok = false;
        res.detail = trial_tag("Gram check failed on factor " + std::to_string(factor), trial);
        return res;
      }
    }
    if (small < 2) continue;
    FactorType cf = FactorType::sp(small);
    for (int trial = 0; trial < trials; ++trial) {
      GroupElement g = random_group_element(cd.shape, rng);
      Mat c = random_element(cf, rng, small + 3);
      GroupElement h = GroupElement::identity(cd.shape);
      h.g[static_cast<size_t>(factor)] = central_sp_embed(f.size, c);
      GroupElement gh = g * h;
      for (const auto& fn : cd.functions) {
        Rat a = fn.eval(g);
        Rat b = fn.eval(gh);
        if (a != b) {
          res.ok = false;
          res.detail = trial_tag(fn.name + ": not invariant under central factor", trial);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult verify_left_u_invariance(const CaseData& cd, Rng& rng, int trials) {
  CheckResult res;
  for (int trial = 0; trial < trials; ++trial) {
    GroupElement g = random_group_element(cd.shape, rng);
    GroupElement u = random_unipotent_element(cd.shape, rng);
    GroupElement moved;
    for (size_t k = 0; k < cd.shape.size(); ++k) {
      Mat m = u.g[k].inverse() * g.g[k];
      moved.g.push_back(m);
    }
    for (const auto& fn : cd.functions) {
      Rat a = fn.eval(g);
      Rat b = fn.eval(moved);
      if (a != b) {
        res.ok = false;
        res.detail = trial_tag(fn.name + ": changed by left unipotent factor", trial);
        return res;
      }
    }
  }
  return res;
}

CheckResult verify_right_h0_invariance(const CaseData& cd, Rng& rng, int trials) {
  CheckResult res;
  for (int trial = 0; trial < trials; ++trial) {
    GroupElement g = random_group_element(cd.shape, rng);
    SubgroupSample hs = cd.sample_h(rng, true);
    GroupElement gh = g * hs.h;
    for (const auto& fn : cd.functions) {
      Rat a = fn.eval(g);
      Rat b = fn.eval(gh);
      if (a != b) {
        res.ok = false;
        res.detail = trial_tag(fn.name + ": changed by character-free subgroup element", trial);
        return res;
      }
    }
  }
  return res;
}

IrreducibilityReport check_all_irreducible(const CaseData& cd) {
  IrreducibilityReport rep;
  SemigroupPresentation pres = case_presentation(cd);
  for (size_t i = 0; i < pres.gens.size(); ++i) {
    GeneratorCertificate cert;
    cert.name = pres.names[i];
    A1Result a1 = check_irreducible_a1(i, pres);
    if (a1.irreducible) {
      cert.method = "a1";
      cert.ok = true;
      rep.certs.push_back(cert);
      continue;
    }
    cert.method = "a2";
    const A2Config* cfg = nullptr;
    for (const auto& c : cd.a2)
      if (c.gen == cert.name) { cfg = &c; break; }
    if (cfg == nullptr) {
      cert.ok = false;
      cert.detail = "splits exist but no divisibility witness is configured";
      rep.ok = false;
      rep.certs.push_back(cert);
      continue;
    }
    size_t j = pres.gens.size();
    for (size_t t = 0; t < pres.names.size(); ++t)
      if (pres.names[t] == cfg->divisor) { j = t; break; }
    if (j == pres.gens.size()) {
      cert.ok = false;
      cert.detail = "divisor " + cfg->divisor + " is not a presentation generator";
      rep.ok = false;
      rep.certs.push_back(cert);
      continue;
    }
    Rat fi = evaluate_function(cd, cert.name, cfg->witness);
    Rat fj = evaluate_function(cd, cfg->divisor, cfg->witness);
    A2Result a2 = check_irreducible_a2(i, j, pres, fj, fi);
    cert.ok = a2.ok;
    cert.detail = a2.detail;
    if (!a2.ok) rep.ok = false;
    rep.certs.push_back(cert);
  }
  return rep;
}

}  // namespace ews
