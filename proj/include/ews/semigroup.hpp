#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ews/linalg.hpp"
#include "ews/weights.hpp"

namespace ews {

// Generators of the group-plus-semigroup Z = <lattice part> + N<semigroup
// part>.  The full list (lattice first) must be linearly independent.
struct SemigroupPresentation {
  GroupShape shape;
  std::vector<ExtendedWeight> gens;
  size_t num_lattice = 0;
  std::vector<std::string> names;  // parallel to gens, used in reports

  size_t size() const { return gens.size(); }
  bool is_semigroup_index(size_t i) const { return i >= num_lattice; }
};

// The set { sigma : (mu, sigma) in Z } for a fixed mu: empty, a single value,
// or an arithmetic progression with optional bounds on sigma itself.
class SigmaSet {
 public:
  static SigmaSet none();
  static SigmaSet single(const Int& v);
  // base + t*step over integer t, then clipped to [lo, hi] where present.
  static SigmaSet progression(const Int& base, const Int& step,
                              const std::optional<Int>& lo, const std::optional<Int>& hi);

  bool empty() const { return empty_; }
  bool contains(const Int& sigma) const;
  bool is_single() const;
  const Int& single_value() const;  // requires is_single()

  // Modulus of the progression (0 for a single value); residue in [0, step).
  const Int& step() const { return step_; }
  const Int& residue() const { return residue_; }
  const std::optional<Int>& lo() const { return lo_; }
  const std::optional<Int>& hi() const { return hi_; }

  // { chi - sigma : sigma in this }.
  SigmaSet reflect(const Int& chi) const;
  static SigmaSet intersect(const SigmaSet& a, const SigmaSet& b);

  std::string to_string() const;

 private:
  SigmaSet() = default;
  void normalize();

  bool empty_ = true;
  Int step_ = 0;
  Int residue_ = 0;  // the value itself when step_ == 0
  std::optional<Int> lo_, hi_;
};

// Unique coefficient vector of target over the generators when it exists with
// integral entries, nonnegative on semigroup indices; nullopt otherwise.
// Throws if the generators are dependent.
std::optional<std::vector<Int>> solve_in_basis(const ExtendedWeight& target,
                                               const SemigroupPresentation& pres);

// All characters sigma with (mu, sigma) in Z.  The lambda-part solution set is
// affine of dimension <= 1 over the integers; sign constraints on semigroup
// coefficients clip the line.
SigmaSet sigma_set(const Weight& mu, const SemigroupPresentation& pres);

struct SplitCertificate {
  Weight mu1, mu2;
  std::string reason;
};

struct A1Result {
  bool irreducible = false;
  std::vector<SplitCertificate> splits;
};

// Assertion-1 irreducibility: every split lambda_i = mu1 + mu2 into dominant
// nonzero parts admits no character decomposition inside Z.
A1Result check_irreducible_a1(size_t gen_index, const SemigroupPresentation& pres);

struct A2Result {
  bool ok = false;
  std::string detail;
};

// Assertion-2 irreducibility: the split of gens[i] through gens[j] is the only
// split with both halves in Z, and the witness values show f_j does not divide
// f_i (f_j vanishes where f_i does not).
A2Result check_irreducible_a2(size_t i, size_t j, const SemigroupPresentation& pres,
                              const Rat& fj_at_witness, const Rat& fi_at_witness);

}  // namespace ews
