#include "ews/groups.hpp"

#include <stdexcept>

namespace ews {

GroupElement GroupElement::identity(const GroupShape& shape) {
  GroupElement e;
  for (const auto& f : shape) e.g.push_back(Mat::identity(f.size));
  return e;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (g.size() != o.g.size()) throw std::invalid_argument("group mul: factor count");
  GroupElement r;
  for (size_t i = 0; i < g.size(); ++i) r.g.push_back(g[i] * o.g[i]);
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  for (const auto& m : g) r.g.push_back(m.inverse());
  return r;
}

long Rng::draw(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("draw: empty range");
  return lo + static_cast<long>(gen() % static_cast<uint64_t>(hi - lo + 1));
}

long Rng::draw_nonzero(long lo, long hi) {
  for (;;) {
    long v = draw(lo, hi);
    if (v != 0) return v;
  }
}

Rat Rng::rat_param() {
  Rat r(draw_nonzero(-3, 3), draw(1, 3));
  r.canonicalize();
  return r;
}

bool check_invariant_form(const Mat& m, const FactorType& f) {
  if (m.rows() != f.size || m.cols() != f.size) return false;
  switch (f.kind) {
    case FactorKind::SL:
      return m.det() == 1;
    case FactorKind::Sp: {
      Mat omega = Mat::skew_form(f.size);
      return m.transpose() * omega * m == omega;
    }
    case FactorKind::SO: {
      Mat form = Mat::antidiag_ones(f.size);
      return m.transpose() * form * m == form && m.det() == 1;
    }
  }
  return false;
}

Mat symplectic_type1(const Mat& v) {
  if (v.rows() != v.cols()) throw std::invalid_argument("type1: not square");
  int m = v.rows();
  Mat out(2 * m, 2 * m);
  out.set_block(0, 0, v);
  out.set_block(m, m, v.inverse().antitranspose());
  return out;
}

Mat symplectic_type2(const Mat& c, bool lower) {
  if (c.rows() != c.cols()) throw std::invalid_argument("type2: not square");
  if (c.antitranspose() != c) throw std::invalid_argument("type2: C not antidiagonally symmetric");
  int m = c.rows();
  Mat out = Mat::identity(2 * m);
  if (lower)
    out.set_block(m, 0, c);
  else
    out.set_block(0, m, c);
  return out;
}

Mat embed_at(int n, const std::vector<int>& idx1, const Mat& small) {
  if (small.rows() != small.cols() || static_cast<int>(idx1.size()) != small.rows())
    throw std::invalid_argument("embed_at: shape");
  Mat out = Mat::identity(n);
  for (size_t a = 0; a < idx1.size(); ++a)
    for (size_t b = 0; b < idx1.size(); ++b) {
      int i = idx1[a] - 1, j = idx1[b] - 1;
      if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("embed_at: index");
      out.at(i, j) = small.at(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

Mat central_sp_embed(int two_m, const Mat& small) {
  int inner = small.rows();
  if (inner % 2 != 0 || inner > two_m || (two_m - inner) % 2 != 0)
    throw std::invalid_argument("central_sp_embed: sizes");
  int k = (two_m - inner) / 2;
  std::vector<int> idx;
  for (int i = k + 1; i <= two_m - k; ++i) idx.push_back(i);
  return embed_at(two_m, idx, small);
}

Mat so_step_embed(const Mat& p) {
  int m = p.rows();
  if (m != p.cols() || m < 2) throw std::invalid_argument("so_step_embed: shape");
  if (m % 2 == 0) {
    // Insert the fixed slot in the middle; index map skips it.
    int k = m / 2;
    auto idx = [&](int i) { return i < k ? i : i + 1; };  // 0-based
    Mat out(m + 1, m + 1);
    out.at(k, k) = 1;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.at(idx(i), idx(j)) = p.at(i, j);
    return out;
  }
  // Odd m = 2k+1: conjugate diag(P, 1) by the basis (sigma-image, v) where
  // sigma is an isometry onto the orthogonal complement of v = e_{k+2}-e_{k+1}
  // (with the form scaled by 2) and v is the fixed vector.
  int k = (m - 1) / 2;
  Mat a(m + 1, m + 1);
  for (int i = 0; i < k; ++i) a.at(i, i) = 1;        // e'_i -> e_i
  a.at(k, k) = 1;                                    // e'_{k+1} -> e_{k+1}+e_{k+2}
  a.at(k + 1, k) = 1;
  for (int j = 1; j <= k; ++j) a.at(k + 1 + j, k + j) = 2;  // e'_{k+1+j} -> 2 e_{k+2+j}
  a.at(k, m) = -1;                                   // last column: v
  a.at(k + 1, m) = 1;
  Mat inner(m + 1, m + 1);
  inner.set_block(0, 0, p);
  inner.at(m, m) = 1;
  return a * inner * a.inverse();
}

namespace {

Mat transvection(int n, int i, int j, const Rat& c) {  // 0-based, i != j
  Mat out = Mat::identity(n);
  out.at(i, j) = c;
  return out;
}

// Antidiagonally symmetric basis matrix: E_{ij} + its mirror (or alone on the
// antidiagonal), scaled.
Mat antidiag_symmetric_unit(int m, int i, int j, const Rat& c) {  // 0-based
  Mat out(m, m);
  out.at(i, j) = c;
  int mi = m - 1 - j, mj = m - 1 - i;
  if (mi != i || mj != j) out.at(mi, mj) = c;
  return out;
}

// SO long-root generator: E + c (E_{ij} - E_{n+1-j,n+1-i}), 1-based i<j with
// j != n+1-i and neither index equal to the middle column (odd n).
Mat so_long_root(int n, int i1, int j1, const Rat& c) {
  Mat out = Mat::identity(n);
  out.at(i1 - 1, j1 - 1) = c;
  Rat& mirror = out.at(n - j1, n - i1);
  mirror = mirror - c;  // distinct position by precondition
  return out;
}

// SO short-root generator for odd n: E + c (E_{i,mid} - E_{mid,n+1-i})
// - (c^2/2) E_{i,n+1-i}.
Mat so_short_root(int n, int i1, const Rat& c) {
  int mid = (n + 1) / 2;
  Mat out = Mat::identity(n);
  out.at(i1 - 1, mid - 1) = c;
  out.at(mid - 1, n - i1) = -c;
  out.at(i1 - 1, n - i1) = -c * c / 2;
  return out;
}

Mat sample_generator(const FactorType& f, Rng& rng, bool upper_only) {
  Rat c(rng.draw_nonzero(-3, 3));
  switch (f.kind) {
    case FactorKind::SL: {
      int n = f.size;
      int i = static_cast<int>(rng.draw(0, n - 1));
      int j = static_cast<int>(rng.draw(0, n - 2));
      if (j >= i) ++j;
      if (upper_only && i > j) std::swap(i, j);
      return transvection(n, i, j, c);
    }
    case FactorKind::Sp: {
      int m = f.size / 2;
      int kind = static_cast<int>(rng.draw(0, 2));
      if (m == 1 && kind == 0) kind = 1;  // no GL_1 transvections
      if (kind == 0) {
        int i = static_cast<int>(rng.draw(0, m - 1));
        int j = static_cast<int>(rng.draw(0, m - 2));
        if (j >= i) ++j;
        if (upper_only && i > j) std::swap(i, j);
        return symplectic_type1(transvection(m, i, j, c));
      }
      int i = static_cast<int>(rng.draw(0, m - 1));
      int j = static_cast<int>(rng.draw(0, m - 1));
      bool lower = !upper_only && kind == 2;
      return symplectic_type2(antidiag_symmetric_unit(m, i, j, c), lower);
    }
    case FactorKind::SO: {
      int n = f.size;
      int mid = n % 2 == 1 ? (n + 1) / 2 : 0;
      for (;;) {
        int i = static_cast<int>(rng.draw(1, n));
        int j = static_cast<int>(rng.draw(1, n));
        if (mid && i != mid && (j == mid || rng.draw(0, 3) == 0)) {
          // Short root; the formula covers upper (i < mid) and lower alike.
          if (upper_only && i > mid) i = n + 1 - i;
          return so_short_root(n, i, c);
        }
        if (i == j || j == n + 1 - i || i == mid || j == mid) continue;
        if (upper_only && i > j) std::swap(i, j);
        return so_long_root(n, i, j, c);
      }
    }
  }
  throw std::logic_error("bad kind");
}

}  // namespace

Mat random_element(const FactorType& f, Rng& rng, int length) {
  Mat out = Mat::identity(f.size);
  for (int s = 0; s < length; ++s) out = out * sample_generator(f, rng, false);
  return out;
}

Mat random_unipotent(const FactorType& f, Rng& rng, int length) {
  Mat out = Mat::identity(f.size);
  for (int s = 0; s < length; ++s) out = out * sample_generator(f, rng, true);
  return out;
}

std::vector<Rat> random_torus_params(const FactorType& f, Rng& rng) {
  std::vector<Rat> out;
  for (int i = 0; i < f.torus_params(); ++i) out.push_back(rng.rat_param());
  return out;
}

bool gram_columns_check(const Mat& q, int k) {
  int two_m = q.rows();
  if (two_m % 2 != 0 || k < 1 || 2 * k > two_m) return false;
  std::vector<int> cols;
  for (int j = 1; j <= k; ++j) cols.push_back(j);
  for (int j = two_m - k + 1; j <= two_m; ++j) cols.push_back(j);
  Mat slice = q.columns(cols);
  Mat gram = slice.transpose() * Mat::skew_form(two_m) * slice;
  return gram == Mat::skew_form(2 * k);
}

}  // namespace ews
