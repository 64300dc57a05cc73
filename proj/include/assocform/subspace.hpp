#pragma once

#include <vector>

#include "assocform/form.hpp"

namespace assocform {

// A subspace of one graded piece, stored as the unique reduced row echelon
// basis over the canonical grevlex monomial coordinates. Equal subspaces have
// bit-identical representations.
class GradedSubspace {
 public:
  static GradedSubspace zero(Ring ring, int n, int degree);
  static GradedSubspace full(Ring ring, int n, int degree);
  static GradedSubspace span(Ring ring, int n, int degree,
                             const std::vector<HomogeneousForm>& spanners);
  static GradedSubspace from_rows(Ring ring, int n, int degree, Mat rows);

  Ring ring() const { return ring_; }
  int var_count() const { return n_; }
  int degree() const { return degree_; }
  int dim() const { return basis_.rows(); }
  int ambient_dim() const { return monomials_.size(); }
  bool is_zero() const { return dim() == 0; }

  const Mat& reduced_basis() const { return basis_; }
  const MonomialBasis& monomials() const { return monomials_; }
  std::vector<HomogeneousForm> basis_forms() const;

  bool contains(const HomogeneousForm& f) const;
  bool contains(const GradedSubspace& other) const;
  GradedSubspace intersect(const GradedSubspace& other) const;
  GradedSubspace sum(const GradedSubspace& other) const;

  bool operator==(const GradedSubspace& other) const;
  bool operator!=(const GradedSubspace& other) const { return !(*this == other); }

 private:
  GradedSubspace(Ring ring, int n, int degree);

  void check_same_piece(const GradedSubspace& other) const;

  Ring ring_;
  int n_;
  int degree_;
  MonomialBasis monomials_;
  Mat basis_;
};

}  // namespace assocform
