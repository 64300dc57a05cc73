#pragma once

#include <vector>

#include "assocform/subspace.hpp"

namespace assocform {

// The polar pairing action: g in S_p acts on F in D_m as the constant-
// coefficient differential operator g(d/dz_1, ..., d/dz_n), landing in
// D_{m-p}. Bilinear; zero when p exceeds m; a degree-0 form when p = m.
HomogeneousForm polar_apply(const HomogeneousForm& g, const HomogeneousForm& F);

// The perfect pairing S_m x D_m -> Q. In monomial coordinates it is diagonal
// with entry alpha! at exponent alpha.
Rat polar_pair(const HomogeneousForm& f, const HomogeneousForm& F);

// Annihilator of a subspace of one graded piece under the polar pairing,
// taken inside the same-degree piece of the other ring. Computed as the exact
// null space of the basis matrix with columns scaled by alpha!. Satisfies
// dim perp(W) = ambient - dim W and perp(perp(W)) = W.
GradedSubspace perp(const GradedSubspace& subspace);

// A linear functional on S_m, stored densely over the canonical monomial
// basis.
class Functional {
 public:
  Functional(int n, int degree, std::vector<Rat> values);
  static Functional zero(int n, int degree);
  // The dual-basis functional of one monomial: x^alpha -> 1, others -> 0.
  static Functional dual_basis(int n, const Exponents& exponents);

  int var_count() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Rat>& values() const { return values_; }
  const MonomialBasis& monomials() const { return monomials_; }

  Rat operator()(const HomogeneousForm& f) const;

 private:
  int n_;
  int degree_;
  MonomialBasis monomials_;
  std::vector<Rat> values_;
};

// The element of D_m representing a functional on S_m: the coefficient of
// z^alpha is omega(x^alpha)/alpha!. Satisfies f o result = omega(f) for all
// f in S_m, and result(a) = omega((a_1 x_1 + ... + a_n x_n)^m / m!).
HomogeneousForm inverse_system_of(const Functional& omega);

// True iff every form of the subspace vanishes at the (nonzero) point.
// Decided by power membership: W in D_m vanishes at a iff (sum a_i x_i)^m
// lies in perp(W), and dually for W in S_m. Cross-checked against direct
// basis evaluation.
bool vanishing_criterion(const GradedSubspace& subspace, const std::vector<Rat>& point);

}  // namespace assocform
