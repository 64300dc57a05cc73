#pragma once

#include <vector>

#include "assocform/matrix.hpp"

namespace assocform {

// Exact feasibility of {theta >= 0 : A theta = b} over the rationals.
// Phase-one simplex with Bland's rule; terminates on every input and never
// leaves exact arithmetic.
bool rational_lp_feasible(const Mat& A, const std::vector<Rat>& b);

}  // namespace assocform
