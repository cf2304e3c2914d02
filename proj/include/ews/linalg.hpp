#pragma once

#include <optional>
#include <vector>

#include "ews/matrix.hpp"

namespace ews {

// Row rank over the rationals.
int rank(const Mat& m);

// Solve A x = b when the solution exists and is unique; nullopt if inconsistent.
// Throws if the kernel is nontrivial (caller expects independent columns).
std::optional<std::vector<Rat>> solve_unique(const Mat& A, const std::vector<Rat>& b);

// Basis of { x : A x = 0 } over the rationals.
std::vector<std::vector<Rat>> nullspace(const Mat& A);

// Smith normal form of an integer matrix: U*A*V = D with U, V unimodular and D
// diagonal, d_i | d_{i+1}.  Matrices are returned as Mat with integer entries.
struct Snf {
  Mat U, D, V;
};
Snf smith_normal_form(const Mat& A);

// All integer solutions of A x = b for integer A, b: particular solution plus a
// basis of the integer kernel.  nullopt if no integer solution exists.
struct IntSolutions {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};
std::optional<IntSolutions> snf_solve(const Mat& A, const std::vector<Int>& b);

}  // namespace ews
