#pragma once

#include <string>
#include <vector>

#include "ews/matrix.hpp"

namespace ews {

enum class FactorKind { SL, Sp, SO };

// One classical factor of G in the fixed basis: SL_n plain, Sp_2m preserving
// skew_form(2m), SO_n preserving antidiag_ones(n).  Upper triangular matrices
// form a Borel subgroup in each.
struct FactorType {
  FactorKind kind;
  int size;  // matrix size n (even for Sp)

  static FactorType sl(int n);
  static FactorType sp(int two_m);
  static FactorType so(int n);

  // Number of fundamental weights.
  int rank() const;
  // Number of free torus parameters (equals rank except SL: n-1 = rank).
  int torus_params() const { return rank(); }
  bool operator==(const FactorType& o) const { return kind == o.kind && size == o.size; }
};

using GroupShape = std::vector<FactorType>;

// Weight of a product group in fundamental-weight coordinates, one coefficient
// vector per factor.
struct Weight {
  std::vector<std::vector<Int>> c;

  static Weight zero(const GroupShape& shape);

  bool is_zero() const;
  bool dominant() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return c != o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }
};

// Weight together with an integer multiple of the case's basis character chi_0
// of H (0 whenever H has no characters).
struct ExtendedWeight {
  Weight w;
  Int chi = 0;

  ExtendedWeight operator+(const ExtendedWeight& o) const { return {w + o.w, chi + o.chi}; }
  ExtendedWeight operator-(const ExtendedWeight& o) const { return {w - o.w, chi - o.chi}; }
  bool operator==(const ExtendedWeight& o) const { return w == o.w && chi == o.chi; }
};

// Free torus parameters per factor; the factor type turns them into a diagonal
// matrix: SL_n uses diag(t_1..t_{n-1}, prod^{-1}), Sp_2m uses
// diag(t_1..t_m, t_m^{-1}..t_1^{-1}), SO likewise with a middle 1 when odd.
struct TorusElement {
  std::vector<std::vector<Rat>> t;
};

// Sum of coeffs_i * (i-th fundamental weight) for a single factor.
std::vector<Int> weight_from_fundamental(const FactorType& f, const std::vector<Int>& coeffs);
Weight make_weight(const GroupShape& shape, const std::vector<std::vector<Int>>& coeffs);

// Epsilon coordinates of one factor's weight.  SL uses the traceless
// convention (pi_1 of SL_2 -> (1/2, -1/2)); SO spin weights give half-integers.
std::vector<Rat> to_epsilon_coords(const FactorType& f, const std::vector<Int>& coeffs);
// Inverse of to_epsilon_coords; throws if eps is not a weight of the factor.
std::vector<Int> from_epsilon_coords(const FactorType& f, const std::vector<Rat>& eps);

// True iff the weight is a character of the factor's torus (SO spin weights
// with half-integral epsilon are not).
bool is_torus_integral(const FactorType& f, const std::vector<Int>& coeffs);

// Value of the weight at the torus element, an exact rational.  Throws
// std::domain_error on non-integral SO spin weights.
Rat eval_on_torus(const GroupShape& shape, const Weight& w, const TorusElement& t);

// Diagonal matrix of a torus element for one factor.
Mat torus_matrix(const FactorType& f, const std::vector<Rat>& params);

// Rank over Q of the matrix whose rows are fundamental coordinates followed by
// the character coordinate.
int rank_of_weights(const GroupShape& shape, const std::vector<ExtendedWeight>& ws);

// Human-readable form: "pi_1+2*phi_2" style, factor symbols pi/phi/psi, plus
// ", k chi_0" when the character part is nonzero.
std::string weight_to_string(const GroupShape& shape, const Weight& w);
std::string extended_weight_to_string(const GroupShape& shape, const ExtendedWeight& ew);

}  // namespace ews
