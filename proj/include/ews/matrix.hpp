#pragma once

#include <initializer_list>
#include <vector>

#include "ews/rational.hpp"

namespace ews {

// Dense matrix over the rationals.  Indices are 0-based; the routines that
// mirror textbook minor conventions take 1-based index lists and say so.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int n);
  // Antidiagonal matrix of ones.
  static Mat antidiag_ones(int n);
  // Standard skew form [[0, F], [-F, 0]] on 2m coordinates.
  static Mat skew_form(int two_m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  // Transpose across the antidiagonal: out(i,j) = in(n-1-j, n-1-i).
  Mat antitranspose() const;
  Mat inverse() const;
  Rat det() const;

  bool is_identity() const;
  bool is_upper_triangular() const;
  bool is_upper_unitriangular() const;

  // Determinant of the square submatrix given by 1-based row and column index
  // lists, in the listed order (order matters for the sign).
  Rat minor_det(const std::vector<int>& rows1, const std::vector<int>& cols1) const;

  // Submatrix of the listed 1-based columns, all rows, in the listed order.
  Mat columns(const std::vector<int>& cols1) const;

  Mat block(int i0, int j0, int h, int w) const;
  void set_block(int i0, int j0, const Mat& b);

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace ews
