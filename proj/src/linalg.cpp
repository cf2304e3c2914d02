#include "ews/linalg.hpp"

#include <stdexcept>

namespace ews {

namespace {

// Reduce to row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelonize(Mat& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Rat d = a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) /= d;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Mat& m) {
  Mat a = m;
  return static_cast<int>(echelonize(a).size());
}

std::optional<std::vector<Rat>> solve_unique(const Mat& A, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve_unique: size");
  Mat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  auto pivots = echelonize(aug);
  // Inconsistent if a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  if (static_cast<int>(pivots.size()) < A.cols())
    throw std::domain_error("solve_unique: kernel is nontrivial");
  std::vector<Rat> x(A.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), A.cols());
  return x;
}

std::vector<std::vector<Rat>> nullspace(const Mat& A) {
  Mat a = A;
  auto pivots = echelonize(a);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(A.cols());
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

bool all_integer(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_integer(m.at(i, j))) return false;
  return true;
}

Int int_at(const Mat& m, int i, int j) { return m.at(i, j).get_num(); }

}  // namespace

Snf smith_normal_form(const Mat& A) {
  if (!all_integer(A)) throw std::invalid_argument("smith_normal_form: non-integer entries");
  int n = A.rows(), m = A.cols();
  Mat D = A, U = Mat::identity(n), V = Mat::identity(m);

  auto row_swap = [&](int i, int k) {
    for (int j = 0; j < m; ++j) std::swap(D.at(i, j), D.at(k, j));
    for (int j = 0; j < n; ++j) std::swap(U.at(i, j), U.at(k, j));
  };
  auto col_swap = [&](int j, int k) {
    for (int i = 0; i < n; ++i) std::swap(D.at(i, j), D.at(i, k));
    for (int i = 0; i < m; ++i) std::swap(V.at(i, j), V.at(i, k));
  };
  auto row_add = [&](int i, int k, const Int& c) {  // row i += c * row k
    Rat rc(c);
    for (int j = 0; j < m; ++j) D.at(i, j) += rc * D.at(k, j);
    for (int j = 0; j < n; ++j) U.at(i, j) += rc * U.at(k, j);
  };
  auto col_add = [&](int j, int k, const Int& c) {  // col j += c * col k
    Rat rc(c);
    for (int i = 0; i < n; ++i) D.at(i, j) += rc * D.at(i, k);
    for (int i = 0; i < m; ++i) V.at(i, j) += rc * V.at(i, k);
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < m; ++j) D.at(i, j) = -D.at(i, j);
    for (int j = 0; j < n; ++j) U.at(i, j) = -U.at(i, j);
  };

  int t = 0;
  while (t < n && t < m) {
    // Find a nonzero pivot in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < n && pi < 0; ++i)
      for (int j = t; j < m; ++j)
        if (D.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    // Clear row and column t by repeated division.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), int_at(D, i, t).get_mpz_t(),
                    int_at(D, t, t).get_mpz_t());
        row_add(i, t, -q);
        if (r != 0) { row_swap(t, i); dirty = true; }
      }
      for (int j = t + 1; j < m; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), int_at(D, t, j).get_mpz_t(),
                    int_at(D, t, t).get_mpz_t());
        col_add(j, t, -q);
        if (r != 0) { col_swap(t, j); dirty = true; }
      }
    }
    ++t;
  }
  // Positive diagonal, then enforce the divisibility chain.
  for (int i = 0; i < t; ++i)
    if (D.at(i, i) < 0) row_neg(i);
  for (int i = 0; i + 1 < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      Int a = int_at(D, i, i), b = int_at(D, j, j);
      if (a == 0 || b % a == 0) continue;
      // Standard 2x2 fix: fold d_j into position i via gcd.
      col_add(i, j, 1);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        if (D.at(j, i) != 0) {
          Int q, r;
          mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), int_at(D, j, i).get_mpz_t(),
                      int_at(D, i, i).get_mpz_t());
          row_add(j, i, -q);
          if (r != 0) { row_swap(i, j); dirty = true; }
        }
        if (D.at(i, j) != 0) {
          Int q, r;
          mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), int_at(D, i, j).get_mpz_t(),
                      int_at(D, i, i).get_mpz_t());
          col_add(j, i, -q);
          if (r != 0) { col_swap(i, j); dirty = true; }
        }
      }
      if (D.at(i, i) < 0) row_neg(i);
      if (D.at(j, j) < 0) row_neg(j);
    }
  }
  return {U, D, V};
}

std::optional<IntSolutions> snf_solve(const Mat& A, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("snf_solve: size");
  Snf s = smith_normal_form(A);
  int n = A.rows(), m = A.cols();
  // U b
  std::vector<Int> ub(n, Int(0));
  for (int i = 0; i < n; ++i) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) acc += s.U.at(i, j) * Rat(b[j]);
    if (!is_integer(acc)) throw std::logic_error("snf_solve: U not integral");
    ub[i] = acc.get_num();
  }
  // Solve D y = U b.
  std::vector<Int> y(m, Int(0));
  int r = 0;
  for (int i = 0; i < std::min(n, m); ++i)
    if (s.D.at(i, i) != 0) r = i + 1;
  for (int i = 0; i < n; ++i) {
    if (i < r) {
      Int d = s.D.at(i, i).get_num();
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  // x = V y; kernel basis = last m-r columns of V.
  IntSolutions out;
  out.particular.assign(m, Int(0));
  for (int i = 0; i < m; ++i) {
    Rat acc(0);
    for (int j = 0; j < m; ++j) acc += s.V.at(i, j) * Rat(y[j]);
    out.particular[i] = acc.get_num();
  }
  for (int k = r; k < m; ++k) {
    std::vector<Int> v(m);
    for (int i = 0; i < m; ++i) v[i] = s.V.at(i, k).get_num();
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace ews
