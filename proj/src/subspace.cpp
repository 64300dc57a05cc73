#include "assocform/subspace.hpp"

#include <utility>

#include "assocform/errors.hpp"

namespace assocform {

GradedSubspace::GradedSubspace(Ring ring, int n, int degree)
    : ring_(ring), n_(n), degree_(degree), monomials_(n, degree),
      basis_(0, monomials_.size()) {}

GradedSubspace GradedSubspace::zero(Ring ring, int n, int degree) {
  return GradedSubspace(ring, n, degree);
}

GradedSubspace GradedSubspace::full(Ring ring, int n, int degree) {
  GradedSubspace out(ring, n, degree);
  out.basis_ = Mat::identity(out.monomials_.size());
  return out;
}

GradedSubspace GradedSubspace::span(Ring ring, int n, int degree,
                                    const std::vector<HomogeneousForm>& spanners) {
  GradedSubspace out(ring, n, degree);
  Mat rows(0, out.monomials_.size());
  for (const HomogeneousForm& f : spanners) {
    if (f.ring() != ring || f.var_count() != n || f.degree() != degree)
      throw StructuralError("structural_error",
                            "spanning form is not in the target graded piece");
    if (f.is_zero()) continue;
    rows.append_row(coordinates(f, out.monomials_));
  }
  out.basis_ = row_space(std::move(rows));
  return out;
}

GradedSubspace GradedSubspace::from_rows(Ring ring, int n, int degree, Mat rows) {
  GradedSubspace out(ring, n, degree);
  if (rows.rows() > 0 && rows.cols() != out.monomials_.size())
    throw StructuralError("structural_error", "row width does not match graded piece");
  out.basis_ = row_space(std::move(rows));
  return out;
}

std::vector<HomogeneousForm> GradedSubspace::basis_forms() const {
  std::vector<HomogeneousForm> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int r = 0; r < basis_.rows(); ++r)
    out.push_back(form_from_coordinates(ring_, monomials_, basis_.row(r)));
  return out;
}

void GradedSubspace::check_same_piece(const GradedSubspace& other) const {
  if (ring_ != other.ring_ || n_ != other.n_ || degree_ != other.degree_)
    throw StructuralError("structural_error", "mixed graded pieces");
}

bool GradedSubspace::contains(const HomogeneousForm& f) const {
  if (f.ring() != ring_ || f.var_count() != n_ || f.degree() != degree_)
    throw StructuralError("structural_error", "form is not in the graded piece");
  if (f.is_zero()) return true;
  return in_row_space(basis_, coordinates(f, monomials_));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  check_same_piece(other);
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!in_row_space(basis_, other.basis_.row(r))) return false;
  return true;
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& other) const {
  check_same_piece(other);
  // U cap W = the common annihilator of both orthogonal complements (standard
  // dot product over Q, exact).
  Mat stacked(0, monomials_.size());
  const Mat comp_a = null_space(basis_);
  const Mat comp_b = null_space(other.basis_);
  for (int r = 0; r < comp_a.rows(); ++r) stacked.append_row(comp_a.row(r));
  for (int r = 0; r < comp_b.rows(); ++r) stacked.append_row(comp_b.row(r));
  GradedSubspace out(ring_, n_, degree_);
  out.basis_ = null_space(stacked);
  return out;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& other) const {
  check_same_piece(other);
  Mat stacked(0, monomials_.size());
  for (int r = 0; r < basis_.rows(); ++r) stacked.append_row(basis_.row(r));
  for (int r = 0; r < other.basis_.rows(); ++r) stacked.append_row(other.basis_.row(r));
  GradedSubspace out(ring_, n_, degree_);
  out.basis_ = row_space(std::move(stacked));
  return out;
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
  return ring_ == other.ring_ && n_ == other.n_ && degree_ == other.degree_ &&
         basis_ == other.basis_;
}

}  // namespace assocform
