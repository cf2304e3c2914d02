#include "ews/branching.hpp"

#include <functional>
#include <stdexcept>

namespace ews {

RootSystem RootSystem::of(const FactorType& f) {
  switch (f.kind) {
    case FactorKind::SL: return {'A', f.size - 1};
    case FactorKind::Sp: return {'C', f.size / 2};
    case FactorKind::SO:
      return {f.size % 2 == 1 ? 'B' : 'D', f.size / 2};
  }
  throw std::logic_error("bad kind");
}

namespace {

void require_dominant(const SimpleWeight& c) {
  for (const auto& x : c)
    if (x < 0) throw std::invalid_argument("branching: non-dominant weight");
}

// Iterate over all splits a_i + b_i = c_i of the chosen positions.
void for_each_split(const SimpleWeight& c, const std::vector<int>& positions,
                    const std::function<void(const std::vector<Int>&, const std::vector<Int>&)>& fn) {
  size_t p = positions.size();
  std::vector<Int> a(c.size(), Int(0)), b = c;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == p) {
      fn(a, b);
      return;
    }
    int i = positions[idx];
    for (Int ai(0); ai <= c[i]; ++ai) {
      a[i] = ai;
      b[i] = c[i] - ai;
      rec(idx + 1);
    }
    a[i] = 0;
    b[i] = c[i];
  };
  rec(0);
}

}  // namespace

BranchResult branch_sl(int n, const SimpleWeight& lambda) {
  if (n < 2) throw std::invalid_argument("branch_sl: n >= 2");
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("branch_sl: rank");
  require_dominant(lambda);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  BranchResult out;
  for_each_split(lambda, all, [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    // mu_j = b_j + a_{j+1} on SL_n (0-based j = 0..n-2); a_1 and b_n vanish.
    SimpleWeight mu(n - 1, Int(0));
    for (int j = 0; j + 1 < n; ++j) mu[j] = b[j] + a[j + 1];
    out[mu] += 1;
  });
  return out;
}

BranchResult branch_spin_odd(int k, const SimpleWeight& lambda) {
  if (k < 2) throw std::invalid_argument("branch_spin_odd: k >= 2");
  if (static_cast<int>(lambda.size()) != k) throw std::invalid_argument("branch_spin_odd: rank");
  require_dominant(lambda);
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  BranchResult out;
  for_each_split(lambda, all, [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    // The special summand b_{k-1}(pi_{k-1} + pi_k) only changes the last
    // coordinate; everything else follows the ordinary b_j + a_{j+1} pattern.
    SimpleWeight mu(k, Int(0));
    for (int j = 0; j + 1 < k; ++j) mu[j] = b[j] + a[j + 1];
    mu[k - 1] = b[k - 2] + b[k - 1];
    out[mu] += 1;
  });
  return out;
}

BranchResult branch_spin_even(int k, const SimpleWeight& lambda) {
  if (k < 1) throw std::invalid_argument("branch_spin_even: k >= 1");
  if (static_cast<int>(lambda.size()) != k + 1) throw std::invalid_argument("branch_spin_even: rank");
  require_dominant(lambda);
  // Normal form: pull out d = min(c_k, c_{k+1}).
  SimpleWeight c = lambda;
  Int d = std::min(c[k - 1], c[k]);
  c[k - 1] -= d;
  c[k] -= d;
  std::vector<int> low(k - 1);
  for (int i = 0; i + 1 < k; ++i) low[i] = i;
  BranchResult out;
  for_each_split(c, low, [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    for (Int bd(0); bd <= d; ++bd) {
      Int ad = d - bd;
      SimpleWeight mu(k, Int(0));
      for (int j = 0; j + 2 <= k; ++j) mu[j] = b[j] + (j + 2 < k + 1 ? a[j + 1] : Int(0));
      if (k >= 2) mu[k - 2] += ad;      // a pi_{k-1} from the diagonal part
      mu[k - 1] = c[k - 1] + c[k] + 2 * bd;
      out[mu] += 1;
    }
  });
  return out;
}

namespace {

std::vector<Rat> eps_for(const RootSystem& rs, const SimpleWeight& lambda) {
  switch (rs.family) {
    case 'A': return to_epsilon_coords(FactorType::sl(rs.rank + 1), lambda);
    case 'B': return to_epsilon_coords(FactorType::so(2 * rs.rank + 1), lambda);
    case 'C': return to_epsilon_coords(FactorType::sp(2 * rs.rank), lambda);
    case 'D': return to_epsilon_coords(FactorType::so(2 * rs.rank), lambda);
  }
  throw std::invalid_argument("weyl_dim: family");
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const SimpleWeight& lambda) {
  require_dominant(lambda);
  std::vector<Rat> eps = eps_for(rs, lambda);
  int r = static_cast<int>(eps.size());
  Rat dim(1);
  if (rs.family == 'A') {
    // l_i = eps_i + (n - i); only differences matter.
    int n = r;
    std::vector<Rat> l(n);
    for (int i = 0; i < n; ++i) l[i] = eps[i] + Rat(n - 1 - i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) dim *= (l[i] - l[j]) / Rat(j - i);
  } else {
    std::vector<Rat> l(r), rho(r);
    for (int i = 0; i < r; ++i) {
      Rat base;
      if (rs.family == 'B') base = Rat(2 * (r - 1 - i) + 1, 2);
      else if (rs.family == 'C') base = Rat(r - i);
      else base = Rat(r - 1 - i);
      rho[i] = base;
      l[i] = eps[i] + base;
    }
    if (rs.family != 'D')
      for (int i = 0; i < r; ++i) dim *= l[i] / rho[i];
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        dim *= (l[i] * l[i] - l[j] * l[j]) / (rho[i] * rho[i] - rho[j] * rho[j]);
  }
  Rat d = dim;
  if (!is_integer(d) || d <= 0) throw std::logic_error("weyl_dim: non-integral result");
  return d.get_num();
}

}  // namespace ews
