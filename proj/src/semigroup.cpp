#include "ews/semigroup.hpp"

#include <sstream>
#include <stdexcept>

namespace ews {

namespace {

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

SigmaSet SigmaSet::none() { return SigmaSet(); }

SigmaSet SigmaSet::single(const Int& v) {
  SigmaSet s;
  s.empty_ = false;
  s.step_ = 0;
  s.residue_ = v;
  s.lo_ = v;
  s.hi_ = v;
  return s;
}

SigmaSet SigmaSet::progression(const Int& base, const Int& step,
                               const std::optional<Int>& lo, const std::optional<Int>& hi) {
  if (step == 0) throw std::invalid_argument("SigmaSet: zero step");
  SigmaSet s;
  s.empty_ = false;
  s.step_ = abs(step);
  s.residue_ = mod_floor(base, s.step_);
  s.lo_ = lo;
  s.hi_ = hi;
  s.normalize();
  return s;
}

void SigmaSet::normalize() {
  if (empty_) return;
  if (step_ == 0) return;
  if (lo_) {  // tighten lo to the first member >= lo
    Int first = *lo_ + mod_floor(residue_ - *lo_, step_);
    lo_ = first;
  }
  if (hi_) {  // tighten hi to the last member <= hi
    Int last = *hi_ - mod_floor(*hi_ - residue_, step_);
    hi_ = last;
  }
  if (lo_ && hi_) {
    if (*lo_ > *hi_) {
      *this = SigmaSet();
      return;
    }
    if (*lo_ == *hi_) {
      *this = single(*lo_);
      return;
    }
  }
}

bool SigmaSet::contains(const Int& sigma) const {
  if (empty_) return false;
  if (step_ == 0) return sigma == residue_;
  if (mod_floor(sigma, step_) != residue_) return false;
  if (lo_ && sigma < *lo_) return false;
  if (hi_ && sigma > *hi_) return false;
  return true;
}

bool SigmaSet::is_single() const { return !empty_ && step_ == 0; }

const Int& SigmaSet::single_value() const {
  if (!is_single()) throw std::logic_error("SigmaSet: not a single value");
  return residue_;
}

SigmaSet SigmaSet::reflect(const Int& chi) const {
  if (empty_) return none();
  if (step_ == 0) return single(chi - residue_);
  std::optional<Int> lo, hi;
  if (hi_) lo = chi - *hi_;
  if (lo_) hi = chi - *lo_;
  return progression(chi - residue_, step_, lo, hi);
}

SigmaSet SigmaSet::intersect(const SigmaSet& a, const SigmaSet& b) {
  if (a.empty_ || b.empty_) return none();
  if (a.step_ == 0) return b.contains(a.residue_) ? a : none();
  if (b.step_ == 0) return a.contains(b.residue_) ? b : none();
  // Chinese remainder on the two residue classes.
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.step_.get_mpz_t(),
             b.step_.get_mpz_t());
  Int diff = b.residue_ - a.residue_;
  if (diff % g != 0) return none();
  Int lcm = a.step_ / g * b.step_;
  // x = ra + a.step * (diff/g * u mod (b.step/g))
  Int k = mod_floor(diff / g * u, b.step_ / g);
  Int res = a.residue_ + a.step_ * k;
  std::optional<Int> lo, hi;
  if (a.lo_) lo = *a.lo_;
  if (b.lo_) lo = lo ? std::max(*lo, *b.lo_) : *b.lo_;
  if (a.hi_) hi = *a.hi_;
  if (b.hi_) hi = hi ? std::min(*hi, *b.hi_) : *b.hi_;
  return progression(res, lcm, lo, hi);
}

std::string SigmaSet::to_string() const {
  if (empty_) return "{}";
  std::ostringstream os;
  if (step_ == 0) {
    os << "{" << residue_.get_str() << "}";
    return os.str();
  }
  os << "{sigma = " << residue_.get_str() << " mod " << step_.get_str();
  if (lo_) os << ", sigma >= " << lo_->get_str();
  if (hi_) os << ", sigma <= " << hi_->get_str();
  os << "}";
  return os.str();
}

namespace {

int total_rank(const GroupShape& shape) {
  int total = 0;
  for (const auto& f : shape) total += f.rank();
  return total;
}

std::vector<Int> flatten(const Weight& w) {
  std::vector<Int> out;
  for (const auto& v : w.c) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_in_basis(const ExtendedWeight& target,
                                               const SemigroupPresentation& pres) {
  int rows = total_rank(pres.shape) + 1;
  int cols = static_cast<int>(pres.size());
  Mat a(rows, cols);
  for (int j = 0; j < cols; ++j) {
    auto flat = flatten(pres.gens[j].w);
    for (int i = 0; i + 1 < rows; ++i) a.at(i, j) = Rat(flat[i]);
    a.at(rows - 1, j) = Rat(pres.gens[j].chi);
  }
  std::vector<Rat> b;
  for (const auto& x : flatten(target.w)) b.emplace_back(x);
  b.emplace_back(target.chi);
  auto x = solve_unique(a, b);  // throws if generators are dependent
  if (!x) return std::nullopt;
  std::vector<Int> out;
  for (size_t i = 0; i < x->size(); ++i) {
    if (!is_integer((*x)[i])) return std::nullopt;
    Int v = (*x)[i].get_num();
    if (pres.is_semigroup_index(i) && v < 0) return std::nullopt;
    out.push_back(v);
  }
  return out;
}

SigmaSet sigma_set(const Weight& mu, const SemigroupPresentation& pres) {
  int rows = total_rank(pres.shape);
  int cols = static_cast<int>(pres.size());
  Mat a(rows, cols);
  for (int j = 0; j < cols; ++j) {
    auto flat = flatten(pres.gens[j].w);
    for (int i = 0; i < rows; ++i) a.at(i, j) = Rat(flat[i]);
  }
  auto sol = snf_solve(a, flatten(mu));
  if (!sol) return SigmaSet::none();
  if (sol->kernel.size() > 1)
    throw std::logic_error("sigma_set: lambda-part kernel dimension > 1");
  auto chi_of = [&](const std::vector<Int>& x) {
    Int s(0);
    for (int j = 0; j < cols; ++j) s += x[j] * pres.gens[j].chi;
    return s;
  };
  if (sol->kernel.empty()) {
    for (int j = 0; j < cols; ++j)
      if (pres.is_semigroup_index(j) && sol->particular[j] < 0) return SigmaSet::none();
    return SigmaSet::single(chi_of(sol->particular));
  }
  const auto& w = sol->kernel[0];
  Int sigma_w = chi_of(w);
  if (sigma_w == 0)
    throw std::logic_error("sigma_set: extended generators are dependent");
  // Sign constraints p_j + t w_j >= 0 on semigroup indices clip t.
  std::optional<Int> t_lo, t_hi;
  for (int j = 0; j < cols; ++j) {
    if (!pres.is_semigroup_index(j)) continue;
    const Int& p = sol->particular[j];
    const Int& wj = w[j];
    if (wj == 0) {
      if (p < 0) return SigmaSet::none();
      continue;
    }
    Int bound;
    if (wj > 0) {  // t >= ceil(-p / wj)
      mpz_cdiv_q(bound.get_mpz_t(), Int(-p).get_mpz_t(), wj.get_mpz_t());
      t_lo = t_lo ? std::max(*t_lo, bound) : bound;
    } else {  // t <= floor(-p / wj)
      mpz_fdiv_q(bound.get_mpz_t(), Int(-p).get_mpz_t(), wj.get_mpz_t());
      t_hi = t_hi ? std::min(*t_hi, bound) : bound;
    }
  }
  if (t_lo && t_hi && *t_lo > *t_hi) return SigmaSet::none();
  Int sigma_p = chi_of(sol->particular);
  // sigma(t) = sigma_p + t sigma_w; translate t bounds to sigma bounds.
  std::optional<Int> lo, hi;
  if (sigma_w > 0) {
    if (t_lo) lo = sigma_p + *t_lo * sigma_w;
    if (t_hi) hi = sigma_p + *t_hi * sigma_w;
  } else {
    if (t_hi) lo = sigma_p + *t_hi * sigma_w;
    if (t_lo) hi = sigma_p + *t_lo * sigma_w;
  }
  return SigmaSet::progression(sigma_p, sigma_w, lo, hi);
}

namespace {

// Iterate mu1 over the coordinatewise box [0, lambda], excluding 0 and lambda.
template <typename Fn>
void for_each_split(const Weight& lambda, const Fn& fn) {
  Weight mu1 = lambda;
  for (auto& v : mu1.c)
    for (auto& x : v) x = 0;
  // Odometer over the flattened coordinates, capped by lambda.
  std::vector<Int*> slots;
  std::vector<const Int*> caps;
  for (size_t f = 0; f < mu1.c.size(); ++f)
    for (size_t i = 0; i < mu1.c[f].size(); ++i) {
      slots.push_back(&mu1.c[f][i]);
      caps.push_back(&lambda.c[f][i]);
    }
  for (;;) {
    size_t pos = 0;
    while (pos < slots.size()) {
      if (*slots[pos] < *caps[pos]) {
        *slots[pos] += 1;
        break;
      }
      *slots[pos] = 0;
      ++pos;
    }
    if (pos == slots.size()) break;  // wrapped: done
    if (mu1 == lambda) continue;     // endpoint excluded
    fn(mu1, lambda - mu1);
  }
}

}  // namespace

A1Result check_irreducible_a1(size_t gen_index, const SemigroupPresentation& pres) {
  const ExtendedWeight& g = pres.gens.at(gen_index);
  A1Result out;
  out.irreducible = true;
  for_each_split(g.w, [&](const Weight& mu1, const Weight& mu2) {
    SplitCertificate cert{mu1, mu2, ""};
    SigmaSet s1 = sigma_set(mu1, pres);
    if (s1.empty()) {
      cert.reason = "left part has no characters in Z";
      out.splits.push_back(cert);
      return;
    }
    SigmaSet s2 = sigma_set(mu2, pres);
    if (s2.empty()) {
      cert.reason = "right part has no characters in Z";
      out.splits.push_back(cert);
      return;
    }
    SigmaSet both = SigmaSet::intersect(s1, s2.reflect(g.chi));
    if (both.empty()) {
      cert.reason = "character sets " + s1.to_string() + " and chi - " + s2.to_string() +
                    " do not meet";
      out.splits.push_back(cert);
      return;
    }
    cert.reason = "ADMITS decomposition with sigma in " + both.to_string();
    out.splits.push_back(cert);
    out.irreducible = false;
  });
  return out;
}

A2Result check_irreducible_a2(size_t i, size_t j, const SemigroupPresentation& pres,
                              const Rat& fj_at_witness, const Rat& fi_at_witness) {
  A2Result out;
  if (i == j) {
    out.detail = "degenerate: i == j";
    return out;
  }
  const ExtendedWeight& gi = pres.gens.at(i);
  const ExtendedWeight& gj = pres.gens.at(j);
  ExtendedWeight comp = gi - gj;
  if (!comp.w.dominant() || comp.w.is_zero() || gj.w.is_zero()) {
    out.detail = "split through g_j is not a dominant nonzero split";
    return out;
  }
  if (comp.w == gj.w) {
    out.detail = "ambiguous: complement weight equals g_j weight";
    return out;
  }
  if (!solve_in_basis(comp, pres)) {
    out.detail = "complement of g_j is not in Z";
    return out;
  }
  bool unique = true;
  std::string violation;
  for_each_split(gi.w, [&](const Weight& mu1, const Weight& mu2) {
    SigmaSet both = SigmaSet::intersect(sigma_set(mu1, pres),
                                        sigma_set(mu2, pres).reflect(gi.chi));
    bool canonical = mu1 == gj.w && mu2 == comp.w;
    bool mirrored = mu1 == comp.w && mu2 == gj.w;
    if (canonical || mirrored) {
      Int want = canonical ? gj.chi : comp.chi;
      if (!(both.is_single() && both.single_value() == want)) {
        unique = false;
        violation = "canonical split character set is " + both.to_string();
      }
      return;
    }
    if (!both.empty()) {
      unique = false;
      violation = "extra decomposition with sigma in " + both.to_string();
    }
  });
  if (!unique) {
    out.detail = violation;
    return out;
  }
  if (fj_at_witness != 0) {
    out.detail = "witness does not kill f_j";
    return out;
  }
  if (fi_at_witness == 0) {
    out.detail = "witness kills f_i";
    return out;
  }
  out.ok = true;
  out.detail = "unique split through g_j; witness separates";
  return out;
}

}  // namespace ews
