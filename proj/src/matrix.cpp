#include "ews/matrix.hpp"

#include <stdexcept>

namespace ews {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged rows");
    for (const auto& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::antidiag_ones(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

Mat Mat::skew_form(int two_m) {
  if (two_m % 2 != 0) throw std::invalid_argument("skew_form: odd size");
  int m = two_m / 2;
  Mat J(two_m, two_m);
  for (int i = 0; i < m; ++i) {
    J.at(i, two_m - 1 - i) = 1;
    J.at(m + i, m - 1 - i) = -1;
  }
  return J;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::scaled(const Rat& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::antitranspose() const {
  if (rows_ != cols_) throw std::invalid_argument("antitranspose: not square");
  int n = rows_;
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(n - 1 - j, n - 1 - i);
  return r;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  int n = rows_;
  Mat a = *this;
  Mat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rat Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: not square");
  int n = rows_;
  Mat a = *this;
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) / a.at(col, col);
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i && j < cols_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool Mat::is_upper_unitriangular() const {
  if (!is_upper_triangular() || rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    if (at(i, i) != 1) return false;
  return true;
}

Rat Mat::minor_det(const std::vector<int>& rows1, const std::vector<int>& cols1) const {
  if (rows1.size() != cols1.size()) throw std::invalid_argument("minor_det: not square");
  int k = static_cast<int>(rows1.size());
  Mat sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int r = rows1[i] - 1, c = cols1[j] - 1;
      if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("minor_det: index");
      sub.at(i, j) = at(r, c);
    }
  return sub.det();
}

Mat Mat::columns(const std::vector<int>& cols1) const {
  Mat r(rows_, static_cast<int>(cols1.size()));
  for (size_t j = 0; j < cols1.size(); ++j) {
    int c = cols1[j] - 1;
    if (c < 0 || c >= cols_) throw std::out_of_range("columns: index");
    for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(j)) = at(i, c);
  }
  return r;
}

Mat Mat::block(int i0, int j0, int h, int w) const {
  if (i0 < 0 || j0 < 0 || i0 + h > rows_ || j0 + w > cols_)
    throw std::out_of_range("block");
  Mat r(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
  return r;
}

void Mat::set_block(int i0, int j0, const Mat& b) {
  if (i0 < 0 || j0 < 0 || i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
    throw std::out_of_range("set_block");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

}  // namespace ews
