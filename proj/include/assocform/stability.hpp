#pragma once

#include <optional>
#include <vector>

#include "assocform/subspace.hpp"

namespace assocform {

// A diagonal one-parameter subgroup of SL(n): integer weights summing to
// zero. The action is lambda(t).x_i = t^{w_i} x_i, so the monomial x^alpha
// scales by t^{<w, alpha>}, and a limit at t -> 0 exists iff no weight in the
// support is negative.
class OneParamSubgroup {
 public:
  explicit OneParamSubgroup(std::vector<long long> weights);
  static OneParamSubgroup trivial(int n);

  int var_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<long long>& weights() const { return weights_; }
  bool is_trivial() const;
  OneParamSubgroup negated() const;

 private:
  std::vector<long long> weights_;
};

long long monomial_weight(const Exponents& e, const OneParamSubgroup& lambda);

struct WeightInit {
  long long weight = 0;           // min over terms of <lambda, alpha>
  HomogeneousForm initial_part;   // sum of the terms attaining the minimum
};

WeightInit weight_and_initial_part(const HomogeneousForm& f,
                                   const OneParamSubgroup& lambda);

// Limit of lambda(t).f as t -> 0: the weight-zero part when the minimal
// weight is >= 0 (possibly the zero form), absent otherwise.
std::optional<HomogeneousForm> lambda_limit(const HomogeneousForm& f,
                                            const OneParamSubgroup& lambda);

// The initial subspace in_lambda(U): spanned by the initial parts of a
// weight-adapted echelon basis. Same dimension as U; idempotent; this is the
// Grassmannian limit of lambda(t).U at t -> 0.
GradedSubspace limit_subspace(const GradedSubspace& U, const OneParamSubgroup& lambda);

// True iff every term of f has strictly positive lambda-weight, so that
// lambda(t).f -> 0: a destabilizing subgroup in the given coordinates.
bool torus_destabilizes(const HomogeneousForm& f, const OneParamSubgroup& lambda);

// True iff no integer weight vector summing to zero destabilizes f. Decided
// exactly: f of degree m in n variables is torus-semistable iff the barycenter
// (m/n, ..., m/n) lies in the Newton polytope of f, a rational LP feasibility.
bool torus_semistable(const HomogeneousForm& f);

// The fiber kernel of the gradient map at f: all g of the same degree whose
// first partials lie in the span of the partials of f. Contains f. For a
// semistable direct sum it is spanned by the summands of the maximally fine
// decomposition, so k >= 2 flags a direct sum and k-1 is the dimension of the
// attached diagonal torus.
struct DirectSumReport {
  GradedSubspace kernel;
  int k = 0;
  bool is_direct_sum = false;
  int torus_dim = 0;
};

DirectSumReport ds_kernel(const HomogeneousForm& f);

// Variable partition exhibiting f as a sum of two forms in disjoint variable
// sets; indices are 0-based.
struct VariableSplit {
  std::vector<int> low;   // {i : w_i < max weight}
  std::vector<int> high;  // {i : w_i = max weight}
};

// Checks the hypothesis w_lambda(init_lambda(df/dx_i)) = d * w_i for all i
// (d = deg f - 1). When it holds the split by maximal weight exhibits f as a
// direct sum; the returned split is verified against the support of f.
// Returns nullopt when the hypothesis fails.
std::optional<VariableSplit> one_ps_direct_sum_certificate(
    const HomogeneousForm& f, const OneParamSubgroup& lambda);

struct PartialFermatReport {
  int k = 0;                      // number of clean power variables
  std::vector<int> power_vars;    // their 0-based indices
  HomogeneousForm residual;       // f minus the clean power terms
};

// Detection in the given coordinates only: the largest k such that, after a
// permutation of variables, f = c_1 x_1^m + ... + c_k x_k^m + g(rest) with
// nonzero c_i and g independent of the first k variables.
PartialFermatReport partial_fermat_in_coordinates(const HomogeneousForm& f);

}  // namespace assocform
