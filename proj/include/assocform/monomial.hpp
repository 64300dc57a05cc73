#pragma once

#include <map>
#include <vector>

#include "assocform/rational.hpp"

namespace assocform {

// Exponent vector of a monomial; always of length n with nonnegative entries.
using Exponents = std::vector<int>;

int exponent_sum(const Exponents& e);

// alpha! = alpha_1! * ... * alpha_n!, the diagonal entry of the polar pairing.
Int factorial_product(const Exponents& e);

// Graded reverse lexicographic order with x1 > x2 > ... > xn. Within one
// graded piece, a > b iff the rightmost nonzero entry of a-b is negative.
bool grevlex_greater(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_greater(a, b);
  }
};

// Canonical ordered monomial basis of the degree-m graded piece in n
// variables. Index 0 is the grevlex-largest monomial (x1^m).
class MonomialBasis {
 public:
  MonomialBasis(int n, int degree);

  int var_count() const { return n_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const Exponents& at(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  int index_of(const Exponents& e) const;  // throws StructuralError if absent

  static int dimension(int n, int degree);  // C(degree+n-1, n-1)

 private:
  int n_;
  int degree_;
  std::vector<Exponents> exponents_;
  std::map<Exponents, int, GrevlexGreater> index_;
};

}  // namespace assocform
