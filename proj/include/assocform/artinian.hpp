#pragma once

#include <vector>

#include "assocform/subspace.hpp"

namespace assocform {

// The degree-t graded piece of the ideal generated by a list of forms,
// together with the dimension of the quotient (S/I)_t.
struct IdealSlice {
  int t = 0;
  GradedSubspace piece;
  int quotient_dim = 0;
};

IdealSlice ideal_piece(const std::vector<HomogeneousForm>& generators, int t, int n,
                       Ring ring = Ring::S);

// Quotient dimensions dim (S/I)_t for t = 0..t_max.
std::vector<int> hilbert_function(const std::vector<HomogeneousForm>& generators,
                                  int t_max, int n, Ring ring = Ring::S);

// Result of testing whether n degree-d forms in n variables are a regular
// sequence: equivalently, whether the quotient vanishes one degree past the
// socle degree n(d-1).
struct CompleteIntersectionCheck {
  int socle_degree = 0;
  bool is_regular = false;
  int socle_dim = 0;     // dim (S/I)_{n(d-1)}
  int overflow_dim = 0;  // dim (S/I)_{n(d-1)+1}
};

CompleteIntersectionCheck regular_sequence_check(
    const std::vector<HomogeneousForm>& generators);

// The dual socle generator of a Gorenstein quotient: the unique-up-to-scalar
// element of D_socle whose annihilator slice matches the ideal. The only
// certificate used is dim (S/I)_socle = 1, which the caller's socle degree
// pins; anything else raises a domain error. Output is normalized (primitive
// integer coefficients, positive leading coefficient).
HomogeneousForm macaulay_inverse_system(const std::vector<HomogeneousForm>& generators,
                                        int socle_degree);

// The associated form of a balanced regular sequence: n forms of one degree d
// in n variables, mapped to the dual socle generator in degree n(d-1).
// Rejects non-regular input (resultant divisor). Depends only on the span of
// the input, up to scalar.
HomogeneousForm associated_form_of_sequence(const std::vector<HomogeneousForm>& generators);

// The associated form of a nondegenerate f of degree d+1: the associated form
// of its partial derivatives. Rejects degenerate input (discriminant divisor).
HomogeneousForm associated_form(const HomogeneousForm& f);

std::vector<HomogeneousForm> partials(const HomogeneousForm& f);

// Span of all order-p partial derivatives of F, i.e. {g o F : g in S_p}.
GradedSubspace gradient_point(const HomogeneousForm& F, int order);

// The kernel I_t of the projection S_t ->> (S/I)_t, as a subspace.
GradedSubspace hilbert_point(const std::vector<HomogeneousForm>& generators, int t,
                             int n, Ring ring = Ring::S);

// {g in S_t : g o F = 0}, the degree-t slice of the annihilator ideal of F.
GradedSubspace apolar_slice(const HomogeneousForm& F, int t);

// A generating set (all slice bases up to the socle degree) of the
// annihilator ideal of F in D_m. Convenient for feeding annihilator ideals to
// generator-based operations.
std::vector<HomogeneousForm> apolar_generators(const HomogeneousForm& F);

int agr_critical_degree(int n, int d);  // n*(d-1) - 1

// True iff the quotient dimension at degree n(d-1)-1 attains its minimum n;
// the domain of agr.
bool in_agr_domain(const GradedSubspace& U);

// For an n-dimensional U in S_d with minimal quotient dimension at degree
// n(d-1)-1: the n-dimensional annihilator of the ideal slice there. For U
// spanned by a regular sequence this equals the gradient point of the
// associated form of U.
GradedSubspace agr(const GradedSubspace& U);

}  // namespace assocform
