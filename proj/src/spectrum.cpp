#include "ews/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ews {

GroupShape DiagChain::shape() const {
  switch (kind) {
    case Kind::sl_step: return {FactorType::sl(n), FactorType::sl(n + 1)};
    case Kind::spin_step: return {FactorType::so(n), FactorType::so(n + 1)};
    case Kind::same_sl: return {FactorType::sl(n), FactorType::sl(n)};
  }
  throw std::logic_error("bad chain");
}

std::vector<SimpleWeight> enumerate_dominant(int rank, int bound) {
  std::vector<SimpleWeight> out;
  SimpleWeight cur(rank, Int(0));
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, bound);
  return out;
}

namespace {

// Highest weight of the dual module, as coefficients on K.
SimpleWeight dualize(const DiagChain& chain, const SimpleWeight& lambda) {
  SimpleWeight out = lambda;
  switch (chain.kind) {
    case DiagChain::Kind::sl_step:
    case DiagChain::Kind::same_sl:
      std::reverse(out.begin(), out.end());
      return out;
    case DiagChain::Kind::spin_step: {
      if (chain.n % 2 == 0) return out;  // K of type B: self-dual
      int k_big = (chain.n + 1) / 2;     // K = Spin_{2k_big}
      if (k_big % 2 == 1) std::swap(out[k_big - 2], out[k_big - 1]);
      return out;
    }
  }
  throw std::logic_error("bad chain");
}

BranchResult restrict_to_l(const DiagChain& chain, const SimpleWeight& lambda) {
  switch (chain.kind) {
    case DiagChain::Kind::sl_step: return branch_sl(chain.n, lambda);
    case DiagChain::Kind::same_sl: return {{lambda, Int(1)}};
    case DiagChain::Kind::spin_step:
      if (chain.n % 2 == 0) return branch_spin_odd(chain.n / 2, lambda);
      return branch_spin_even((chain.n - 1) / 2, lambda);
  }
  throw std::logic_error("bad chain");
}

}  // namespace

std::vector<SpectrumEntry> diag_spectrum(const DiagChain& chain, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("diag_spectrum: bound");
  if (chain.kind == DiagChain::Kind::spin_step && chain.n < 3)
    throw std::invalid_argument("diag_spectrum: spin chain needs n >= 3");
  GroupShape shape = chain.shape();
  int k_rank = shape[1].rank();
  std::vector<SpectrumEntry> out;
  for (const auto& lambda : enumerate_dominant(k_rank, degree_bound)) {
    SimpleWeight lstar = dualize(chain, lambda);
    for (const auto& [mu, mult] : restrict_to_l(chain, lambda))
      out.push_back({Weight{{mu, lstar}}, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.w < b.w; });
  return out;
}

std::vector<Weight> indecomposables_up_to_degree(const std::vector<SpectrumEntry>& entries,
                                                 int /*degree_bound*/) {
  std::set<Weight> present;
  for (const auto& e : entries)
    if (e.mult > 0) present.insert(e.w);
  std::vector<Weight> out;
  for (const auto& w : present) {
    if (w.is_zero()) continue;
    bool decomposable = false;
    for (const auto& w1 : present) {
      if (w1.is_zero()) continue;
      Weight w2 = w - w1;
      if (!w2.dominant() || w2.is_zero()) continue;
      if (present.count(w2)) { decomposable = true; break; }
    }
    if (!decomposable) out.push_back(w);
  }
  return out;
}

namespace {

// Character multiple for a case 1 indecomposable: the weight pattern fixes
// which minor family it lifts to and hence its character.
Int case1_character(int n, const Weight& w) {
  const auto& pi = w.c[0];
  const auto& phi = w.c[1];
  int j = 0, phi_terms = 0;
  for (int idx = 0; idx < static_cast<int>(phi.size()); ++idx) {
    if (phi[idx] == 0) continue;
    if (phi[idx] != 1) throw std::domain_error("case 1 lift: unexpected weight");
    j = idx + 1;
    ++phi_terms;
  }
  if (phi_terms != 1) throw std::domain_error("case 1 lift: unexpected weight");
  auto pi_is = [&](int i) {  // pi part equals pi_i, with pi_0 = pi_n = 0
    SimpleWeight want(n - 1, Int(0));
    if (i >= 1 && i <= n - 1) want[i - 1] = 1;
    return pi == want;
  };
  if (pi_is(n + 1 - j)) return Int(n + 1 - j);  // determinant family, chi = i
  if (pi_is(n - j)) return Int(-j);             // complementary family, chi = -(n+1-i)
  throw std::domain_error("case 1 lift: unexpected weight");
}

}  // namespace

std::vector<ExtendedWeight> case12_generators(int case_id, int n) {
  const int bound = 3;
  if (case_id == 1) {
    if (n < 2 || n > 5) throw std::invalid_argument("case 1: n in 2..5");
    DiagChain chain{DiagChain::Kind::sl_step, n};
    auto indec = indecomposables_up_to_degree(diag_spectrum(chain, bound), bound);
    std::vector<ExtendedWeight> out;
    for (const auto& w : indec) out.push_back({w, case1_character(n, w)});
    return out;
  }
  if (case_id == 2) {
    if (n < 3 || n > 8) throw std::invalid_argument("case 2: n in 3..8");
    DiagChain chain{DiagChain::Kind::spin_step, n};
    auto indec = indecomposables_up_to_degree(diag_spectrum(chain, bound), bound);
    std::vector<ExtendedWeight> out;
    for (const auto& w : indec) out.push_back({w, Int(0)});
    return out;
  }
  throw std::invalid_argument("case12_generators: case 1 or 2 only");
}

}  // namespace ews
