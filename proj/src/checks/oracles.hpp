#pragma once

#include "assocform/form.hpp"
#include "assocform/stability.hpp"

namespace assocform::checks {

// Independent routes used to freeze and cross-check expected values. These
// deliberately avoid the code paths they certify.

// (sum coeffs_i * v_i)^m by repeated ring multiplication.
HomogeneousForm power_of_linear(Ring ring, const std::vector<Rat>& coeffs, int m);

// The polar action computed by iterating single derivatives on F, one
// generator monomial at a time.
HomogeneousForm polar_apply_by_derivatives(const HomogeneousForm& g,
                                           const HomogeneousForm& F);

// Sylvester resultant of two nonzero binary forms.
Rat binary_resultant(const HomogeneousForm& a, const HomogeneousForm& b);

// Whether some integer weight vector summing to zero with |w_i| <= bound
// gives every term of f a strictly positive weight.
bool brute_force_destabilizer(const HomogeneousForm& f, long long bound);

// Rank of the span of the order-k partial derivatives. Rank 3 for a binary
// quartic or quintic at k = 2 rules out any decomposition into powers of two
// independent linear forms, hence any direct sum.
int catalecticant_rank(const HomogeneousForm& f, int order);

}  // namespace assocform::checks
