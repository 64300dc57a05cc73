#pragma once

#include <map>
#include <vector>

#include "assocform/matrix.hpp"
#include "assocform/monomial.hpp"
#include "assocform/rational.hpp"

namespace assocform {

// S is the polynomial ring in x1..xn acting by differentiation on its graded
// dual D in z1..zn.
enum class Ring { S, D };

char ring_variable_letter(Ring ring);

using TermMap = std::map<Exponents, Rat, GrevlexGreater>;

// Sparse homogeneous polynomial with exact rational coefficients. Immutable
// after construction; every operation returns a new value. Invariants: all
// exponent vectors sum to degree(), no stored coefficient is zero.
class HomogeneousForm {
 public:
  // The zero form of the given graded piece.
  HomogeneousForm(Ring ring, int n, int degree);

  static HomogeneousForm monomial(Ring ring, int n, const Exponents& exponents,
                                  const Rat& coefficient);
  static HomogeneousForm from_terms(Ring ring, int n, int degree, TermMap terms);

  Ring ring() const { return ring_; }
  int var_count() const { return n_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  Rat coefficient(const Exponents& e) const;

  // Grevlex-leading term; throws on the zero form.
  const std::pair<const Exponents, Rat>& leading_term() const;

  HomogeneousForm operator+(const HomogeneousForm& other) const;
  HomogeneousForm operator-(const HomogeneousForm& other) const;
  HomogeneousForm operator-() const;
  HomogeneousForm operator*(const HomogeneousForm& other) const;
  HomogeneousForm scaled(const Rat& c) const;
  HomogeneousForm pow(int k) const;

  // d/dx_i (or d/dz_i), 0-based index. Degree drops by one; degree-0 input
  // yields the zero form.
  HomogeneousForm derivative(int var) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  // Projective representative: primitive integer coefficients with positive
  // grevlex-leading coefficient. Zero form maps to itself.
  HomogeneousForm normalized() const;
  bool proportional_to(const HomogeneousForm& other) const;

  bool operator==(const HomogeneousForm& other) const;
  bool operator!=(const HomogeneousForm& other) const { return !(*this == other); }

 private:
  Ring ring_;
  int n_;
  int degree_;
  TermMap terms_;
};

// Invertible linear change of variables x_i -> sum_j m[i][j] x_j. The
// determinant is computed at construction and must be nonzero.
class LinearChange {
 public:
  explicit LinearChange(Mat matrix);
  static LinearChange identity(int n);

  int var_count() const { return matrix_.rows(); }
  const Mat& matrix() const { return matrix_; }
  const Rat& determinant() const { return det_; }

  LinearChange compose(const LinearChange& other) const;  // matrix product
  LinearChange inverse() const;
  LinearChange transposed() const;
  LinearChange contragredient() const;  // inverse transpose

 private:
  LinearChange(Mat matrix, Rat det) : matrix_(std::move(matrix)), det_(std::move(det)) {}

  Mat matrix_;
  Rat det_;
};

// Substitutes x_i -> sum_j g[i][j] x_j. Degree is preserved; the composition
// law apply(apply(f,g),h) = apply(f, g.compose(h)) makes this a right action.
HomogeneousForm apply_linear_change(const HomogeneousForm& f, const LinearChange& g);

// Transplants f into a ring with new_n variables; var_map[i] is the target
// index of source variable i. Targets must be distinct.
HomogeneousForm rename_variables(const HomogeneousForm& f, int new_n,
                                 const std::vector<int>& var_map);

// Same coefficients, other ring tag (x <-> z).
HomogeneousForm with_ring(const HomogeneousForm& f, Ring ring);

std::vector<Rat> coordinates(const HomogeneousForm& f, const MonomialBasis& basis);
HomogeneousForm form_from_coordinates(Ring ring, const MonomialBasis& basis,
                                      const std::vector<Rat>& coords);

}  // namespace assocform
