#include "ews/weights.hpp"

#include "ews/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ews {

FactorType FactorType::sl(int n) {
  if (n < 2) throw std::invalid_argument("SL: n >= 2 required");
  return {FactorKind::SL, n};
}

FactorType FactorType::sp(int two_m) {
  if (two_m < 2 || two_m % 2 != 0) throw std::invalid_argument("Sp: even size >= 2 required");
  return {FactorKind::Sp, two_m};
}

FactorType FactorType::so(int n) {
  if (n < 3) throw std::invalid_argument("SO: n >= 3 required");
  return {FactorKind::SO, n};
}

int FactorType::rank() const {
  switch (kind) {
    case FactorKind::SL: return size - 1;
    case FactorKind::Sp: return size / 2;
    case FactorKind::SO: return size / 2;
  }
  throw std::logic_error("bad kind");
}

Weight Weight::zero(const GroupShape& shape) {
  Weight w;
  for (const auto& f : shape) w.c.emplace_back(f.rank(), Int(0));
  return w;
}

bool Weight::is_zero() const {
  for (const auto& v : c)
    for (const auto& x : v)
      if (x != 0) return false;
  return true;
}

bool Weight::dominant() const {
  for (const auto& v : c)
    for (const auto& x : v)
      if (x < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight add: shape");
  Weight r = *this;
  for (size_t f = 0; f < c.size(); ++f) {
    if (c[f].size() != o.c[f].size()) throw std::invalid_argument("weight add: rank");
    for (size_t i = 0; i < c[f].size(); ++i) r.c[f][i] += o.c[f][i];
  }
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight sub: shape");
  Weight r = *this;
  for (size_t f = 0; f < c.size(); ++f) {
    if (c[f].size() != o.c[f].size()) throw std::invalid_argument("weight sub: rank");
    for (size_t i = 0; i < c[f].size(); ++i) r.c[f][i] -= o.c[f][i];
  }
  return r;
}

std::vector<Int> weight_from_fundamental(const FactorType& f, const std::vector<Int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != f.rank())
    throw std::invalid_argument("weight_from_fundamental: rank mismatch");
  return coeffs;
}

Weight make_weight(const GroupShape& shape, const std::vector<std::vector<Int>>& coeffs) {
  if (coeffs.size() != shape.size()) throw std::invalid_argument("make_weight: factor count");
  Weight w;
  for (size_t f = 0; f < shape.size(); ++f)
    w.c.push_back(weight_from_fundamental(shape[f], coeffs[f]));
  return w;
}

namespace {

// Integral eval convention for SL_n: eps_j = sum_{i>=j} c_i for j < n, last
// coordinate pinned to 0.  Differs from the traceless view by a constant.
std::vector<Rat> sl_partial_sums(int n, const std::vector<Int>& c) {
  std::vector<Rat> eps(n, Rat(0));
  Rat acc(0);
  for (int j = n - 2; j >= 0; --j) {
    acc += Rat(c[j]);
    eps[j] = acc;
  }
  return eps;
}

}  // namespace

std::vector<Rat> to_epsilon_coords(const FactorType& f, const std::vector<Int>& c) {
  if (static_cast<int>(c.size()) != f.rank())
    throw std::invalid_argument("to_epsilon_coords: rank mismatch");
  switch (f.kind) {
    case FactorKind::SL: {
      int n = f.size;
      auto eps = sl_partial_sums(n, c);
      Rat avg(0);
      for (const auto& e : eps) avg += e;
      avg /= n;
      for (auto& e : eps) e -= avg;
      return eps;
    }
    case FactorKind::Sp: {
      int m = f.size / 2;
      std::vector<Rat> eps(m, Rat(0));
      Rat acc(0);
      for (int j = m - 1; j >= 0; --j) {
        acc += Rat(c[j]);
        eps[j] = acc;
      }
      return eps;
    }
    case FactorKind::SO: {
      if (f.size % 2 == 1) {
        int k = f.size / 2;
        std::vector<Rat> eps(k, Rat(0));
        Rat half = Rat(c[k - 1]) / 2;
        Rat acc(0);
        for (int j = k - 1; j >= 0; --j) {
          if (j < k - 1) acc += Rat(c[j]);
          eps[j] = acc + half;
        }
        return eps;
      }
      // eps_j = sum_{i=j..k-2} c_i + (c_{k-1}+c_k)/2 for j <= k-1,
      // eps_k = (c_k - c_{k-1})/2.
      int k = f.size / 2;
      std::vector<Rat> eps(k, Rat(0));
      Rat cm1 = Rat(c[k - 2]), cm0 = Rat(c[k - 1]);
      eps[k - 1] = (cm0 - cm1) / 2;
      Rat acc = (cm1 + cm0) / 2;
      for (int j = k - 2; j >= 0; --j) {
        eps[j] = acc;
        if (j > 0) acc += Rat(c[j - 1]);
      }
      return eps;
    }
  }
  throw std::logic_error("bad kind");
}

std::vector<Int> from_epsilon_coords(const FactorType& f, const std::vector<Rat>& eps) {
  auto need_int = [](const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("from_epsilon_coords: not a weight");
    return q.get_num();
  };
  switch (f.kind) {
    case FactorKind::SL: {
      int n = f.size;
      if (static_cast<int>(eps.size()) != n) throw std::invalid_argument("eps size");
      std::vector<Int> c(n - 1);
      for (int i = 0; i < n - 1; ++i) {
        Rat d = eps[i] - eps[i + 1];
        c[i] = need_int(d);
      }
      return c;
    }
    case FactorKind::Sp: {
      int m = f.size / 2;
      if (static_cast<int>(eps.size()) != m) throw std::invalid_argument("eps size");
      std::vector<Int> c(m);
      for (int i = 0; i + 1 < m; ++i) c[i] = need_int(eps[i] - eps[i + 1]);
      c[m - 1] = need_int(eps[m - 1]);
      return c;
    }
    case FactorKind::SO: {
      int k = f.size / 2;
      if (static_cast<int>(eps.size()) != k) throw std::invalid_argument("eps size");
      std::vector<Int> c(k);
      if (f.size % 2 == 1) {
        for (int i = 0; i + 1 < k; ++i) c[i] = need_int(eps[i] - eps[i + 1]);
        Rat last = eps[k - 1] * 2;
        c[k - 1] = need_int(last);
      } else {
        for (int i = 0; i + 2 < k; ++i) c[i] = need_int(eps[i] - eps[i + 1]);
        c[k - 2] = need_int(eps[k - 2] - eps[k - 1]);
        c[k - 1] = need_int(eps[k - 2] + eps[k - 1]);
      }
      return c;
    }
  }
  throw std::logic_error("bad kind");
}

bool is_torus_integral(const FactorType& f, const std::vector<Int>& c) {
  if (f.kind != FactorKind::SO) return true;
  int k = f.size / 2;
  if (f.size % 2 == 1) return c[k - 1] % 2 == 0;
  return (c[k - 2] - c[k - 1]) % 2 == 0;
}

namespace {

Rat pow_rat_int(const Rat& base, const Int& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("torus exponent too large");
  return rat_pow(base, e.get_si());
}

}  // namespace

Rat eval_on_torus(const GroupShape& shape, const Weight& w, const TorusElement& t) {
  if (w.c.size() != shape.size() || t.t.size() != shape.size())
    throw std::invalid_argument("eval_on_torus: shape mismatch");
  Rat value(1);
  for (size_t f = 0; f < shape.size(); ++f) {
    const FactorType& ft = shape[f];
    if (!is_torus_integral(ft, w.c[f]))
      throw std::domain_error("eval_on_torus: weight is not a torus character");
    if (static_cast<int>(t.t[f].size()) != ft.torus_params())
      throw std::invalid_argument("eval_on_torus: torus params");
    std::vector<Rat> eps;
    if (ft.kind == FactorKind::SL) {
      eps = sl_partial_sums(ft.size, w.c[f]);
      eps.pop_back();  // last exponent is 0 in this convention
    } else {
      eps = to_epsilon_coords(ft, w.c[f]);
    }
    for (size_t j = 0; j < t.t[f].size(); ++j) {
      if (!is_integer(eps[j])) throw std::domain_error("eval_on_torus: non-integral exponent");
      value *= pow_rat_int(t.t[f][j], eps[j].get_num());
    }
  }
  return value;
}

Mat torus_matrix(const FactorType& f, const std::vector<Rat>& params) {
  if (static_cast<int>(params.size()) != f.torus_params())
    throw std::invalid_argument("torus_matrix: params");
  for (const auto& p : params)
    if (p == 0) throw std::invalid_argument("torus_matrix: zero parameter");
  int n = f.size;
  Mat m(n, n);
  switch (f.kind) {
    case FactorKind::SL: {
      Rat prod(1);
      for (int i = 0; i < n - 1; ++i) {
        m.at(i, i) = params[i];
        prod *= params[i];
      }
      m.at(n - 1, n - 1) = Rat(1) / prod;
      return m;
    }
    case FactorKind::Sp: {
      int half = n / 2;
      for (int i = 0; i < half; ++i) {
        m.at(i, i) = params[i];
        m.at(n - 1 - i, n - 1 - i) = Rat(1) / params[i];
      }
      return m;
    }
    case FactorKind::SO: {
      int k = n / 2;
      for (int i = 0; i < k; ++i) {
        m.at(i, i) = params[i];
        m.at(n - 1 - i, n - 1 - i) = Rat(1) / params[i];
      }
      if (n % 2 == 1) m.at(k, k) = 1;
      return m;
    }
  }
  throw std::logic_error("bad kind");
}

int rank_of_weights(const GroupShape& shape, const std::vector<ExtendedWeight>& ws) {
  int total = 0;
  for (const auto& f : shape) total += f.rank();
  Mat m(static_cast<int>(ws.size()), total + 1);
  for (size_t r = 0; r < ws.size(); ++r) {
    int col = 0;
    for (size_t f = 0; f < shape.size(); ++f)
      for (const auto& x : ws[r].w.c[f]) m.at(static_cast<int>(r), col++) = Rat(x);
    m.at(static_cast<int>(r), total) = Rat(ws[r].chi);
  }
  return rank(m);
}

namespace {

const char* factor_symbol(size_t idx) {
  switch (idx) {
    case 0: return "pi";
    case 1: return "phi";
    case 2: return "psi";
    default: return "w";
  }
}

}  // namespace

std::string weight_to_string(const GroupShape& shape, const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (size_t f = 0; f < shape.size(); ++f) {
    for (size_t i = 0; i < w.c[f].size(); ++i) {
      const Int& x = w.c[f][i];
      if (x == 0) continue;
      if (!first) os << "+";
      if (x != 1) os << x.get_str() << "*";
      os << factor_symbol(f) << "_" << (i + 1);
      first = false;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string extended_weight_to_string(const GroupShape& shape, const ExtendedWeight& ew) {
  std::string base = weight_to_string(shape, ew.w);
  if (ew.chi == 0) return base;
  std::ostringstream os;
  os << "(" << base << ", ";
  if (ew.chi == 1) {
  } else if (ew.chi == -1) {
    os << "-";
  } else {
    os << ew.chi.get_str() << "*";
  }
  os << "chi_0)";
  return os.str();
}

}  // namespace ews
