#include "assocform/stability.hpp"

#include <algorithm>
#include <utility>

#include "assocform/artinian.hpp"
#include "assocform/errors.hpp"
#include "assocform/lp.hpp"

namespace assocform {

OneParamSubgroup::OneParamSubgroup(std::vector<long long> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw StructuralError("structural_error", "empty weight vector");
  long long total = 0;
  for (long long w : weights_) total += w;
  if (total != 0)
    throw StructuralError("structural_error", "one-parameter subgroup weights must sum to 0");
}

OneParamSubgroup OneParamSubgroup::trivial(int n) {
  return OneParamSubgroup(std::vector<long long>(static_cast<std::size_t>(n), 0));
}

bool OneParamSubgroup::is_trivial() const {
  for (long long w : weights_)
    if (w != 0) return false;
  return true;
}

OneParamSubgroup OneParamSubgroup::negated() const {
  std::vector<long long> out(weights_);
  for (long long& w : out) w = -w;
  return OneParamSubgroup(std::move(out));
}

long long monomial_weight(const Exponents& e, const OneParamSubgroup& lambda) {
  if (e.size() != lambda.weights().size())
    throw StructuralError("structural_error", "weight/exponent length mismatch");
  long long total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    total += static_cast<long long>(e[i]) * lambda.weights()[i];
  return total;
}

WeightInit weight_and_initial_part(const HomogeneousForm& f,
                                   const OneParamSubgroup& lambda) {
  if (f.is_zero())
    throw StructuralError("undefined_weight", "weight of the zero form is undefined");
  if (f.var_count() != lambda.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  bool have = false;
  long long min_weight = 0;
  for (const auto& [e, c] : f.terms()) {
    const long long w = monomial_weight(e, lambda);
    if (!have || w < min_weight) {
      min_weight = w;
      have = true;
    }
  }
  TermMap initial;
  for (const auto& [e, c] : f.terms())
    if (monomial_weight(e, lambda) == min_weight) initial[e] = c;
  return WeightInit{min_weight,
                    HomogeneousForm::from_terms(f.ring(), f.var_count(), f.degree(),
                                                std::move(initial))};
}

std::optional<HomogeneousForm> lambda_limit(const HomogeneousForm& f,
                                            const OneParamSubgroup& lambda) {
  const WeightInit wi = weight_and_initial_part(f, lambda);
  if (wi.weight < 0) return std::nullopt;
  if (wi.weight > 0) return HomogeneousForm(f.ring(), f.var_count(), f.degree());
  return wi.initial_part;
}

GradedSubspace limit_subspace(const GradedSubspace& U, const OneParamSubgroup& lambda) {
  if (U.var_count() != lambda.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  if (U.is_zero())
    throw StructuralError("structural_error", "limit of the zero subspace");

  // Echelonize with the monomial coordinates sorted by ascending weight (ties
  // in canonical order). Pivots then sit in minimal-weight columns, so each
  // row's initial part survives and the initial parts stay independent.
  const MonomialBasis& monomials = U.monomials();
  std::vector<int> order(static_cast<std::size_t>(monomials.size()));
  for (int i = 0; i < monomials.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return monomial_weight(monomials.at(a), lambda) <
           monomial_weight(monomials.at(b), lambda);
  });

  const Mat& basis = U.reduced_basis();
  Mat permuted(basis.rows(), basis.cols());
  for (int r = 0; r < basis.rows(); ++r)
    for (int c = 0; c < basis.cols(); ++c)
      permuted.at(r, c) = basis.at(r, order[static_cast<std::size_t>(c)]);
  rref_in_place(permuted);

  std::vector<HomogeneousForm> initials;
  for (int r = 0; r < permuted.rows(); ++r) {
    TermMap terms;
    long long min_weight = 0;
    bool have = false;
    for (int c = 0; c < permuted.cols(); ++c) {
      if (sgn(permuted.at(r, c)) == 0) continue;
      const long long w =
          monomial_weight(monomials.at(order[static_cast<std::size_t>(c)]), lambda);
      if (!have) {
        min_weight = w;  // first nonzero is minimal: columns are weight-sorted
        have = true;
      }
      if (w == min_weight)
        terms[monomials.at(order[static_cast<std::size_t>(c)])] = permuted.at(r, c);
    }
    if (have)
      initials.push_back(HomogeneousForm::from_terms(U.ring(), U.var_count(),
                                                     U.degree(), std::move(terms)));
  }
  return GradedSubspace::span(U.ring(), U.var_count(), U.degree(), initials);
}

bool torus_destabilizes(const HomogeneousForm& f, const OneParamSubgroup& lambda) {
  if (lambda.is_trivial())
    throw StructuralError("structural_error", "destabilizer must be nontrivial");
  return weight_and_initial_part(f, lambda).weight > 0;
}

bool torus_semistable(const HomogeneousForm& f) {
  if (f.is_zero())
    throw StructuralError("structural_error", "semistability of the zero form");
  const int n = f.var_count();
  const int m = f.degree();

  // Barycenter membership in the Newton polytope, as exact LP feasibility:
  // convex weights theta over the support with sum(theta) = 1 and
  // sum(theta_alpha * alpha) = (m/n, ..., m/n).
  Mat A(n + 1, f.term_count());
  int col = 0;
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i) A.at(i, col) = e[static_cast<std::size_t>(i)];
    A.at(n, col) = 1;
    ++col;
  }
  std::vector<Rat> b(static_cast<std::size_t>(n + 1), Rat(m, n));
  b.back() = 1;
  for (Rat& v : b) v.canonicalize();
  return rational_lp_feasible(A, b);
}

DirectSumReport ds_kernel(const HomogeneousForm& f) {
  if (f.ring() != Ring::S)
    throw StructuralError("structural_error", "direct-sum detection expects an S-form");
  if (f.is_zero() || f.degree() < 1)
    throw StructuralError("structural_error", "nonzero positive-degree form required");
  const int n = f.var_count();
  const int d = f.degree() - 1;

  const GradedSubspace grad =
      GradedSubspace::span(Ring::S, n, d, partials(f));
  if (grad.dim() != n)
    throw DomainError("degenerate_form",
                      "degenerate: the partial derivatives span only dimension " +
                          std::to_string(grad.dim()));

  // g is in the kernel iff every partial of g is annihilated by the
  // complement of the span of the partials of f.
  const Mat complement = null_space(grad.reduced_basis());
  const MonomialBasis ambient(n, f.degree());
  const MonomialBasis lower(n, d);
  Mat constraints(0, ambient.size());
  for (int i = 0; i < n; ++i) {
    for (int w = 0; w < complement.rows(); ++w) {
      std::vector<Rat> row(static_cast<std::size_t>(ambient.size()));
      for (int col2 = 0; col2 < ambient.size(); ++col2) {
        const Exponents& e = ambient.at(col2);
        const int exp = e[static_cast<std::size_t>(i)];
        if (exp == 0) continue;
        Exponents de(e);
        --de[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(col2)] =
            Rat(exp) * complement.at(w, lower.index_of(de));
      }
      constraints.append_row(row);
    }
  }
  DirectSumReport report{
      GradedSubspace::from_rows(Ring::S, n, f.degree(), null_space(constraints)), 0,
      false, 0};
  report.k = report.kernel.dim();
  report.is_direct_sum = report.k >= 2;
  report.torus_dim = report.k - 1;
  return report;
}

std::optional<VariableSplit> one_ps_direct_sum_certificate(
    const HomogeneousForm& f, const OneParamSubgroup& lambda) {
  if (lambda.is_trivial())
    throw StructuralError("structural_error", "nontrivial subgroup required");
  if (f.var_count() != lambda.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  const int n = f.var_count();
  if (f.is_zero() || f.degree() < 1)
    throw StructuralError("structural_error", "nonzero positive-degree form required");
  const long long d = f.degree() - 1;

  for (int i = 0; i < n; ++i) {
    const HomogeneousForm partial = f.derivative(i);
    if (partial.is_zero()) return std::nullopt;  // degenerate: hypothesis cannot hold
    if (weight_and_initial_part(partial, lambda).weight !=
        d * lambda.weights()[static_cast<std::size_t>(i)])
      return std::nullopt;
  }

  const long long max_weight =
      *std::max_element(lambda.weights().begin(), lambda.weights().end());
  VariableSplit split;
  for (int i = 0; i < n; ++i) {
    if (lambda.weights()[static_cast<std::size_t>(i)] < max_weight)
      split.low.push_back(i);
    else
      split.high.push_back(i);
  }

  // Verify by support inspection: no term may mix the two groups.
  for (const auto& [e, c] : f.terms()) {
    bool uses_low = false;
    bool uses_high = false;
    for (int i : split.low) uses_low = uses_low || e[static_cast<std::size_t>(i)] > 0;
    for (int i : split.high) uses_high = uses_high || e[static_cast<std::size_t>(i)] > 0;
    if (uses_low && uses_high)
      throw std::logic_error("certified split mixes variable groups");
  }
  return split;
}

PartialFermatReport partial_fermat_in_coordinates(const HomogeneousForm& f) {
  if (f.is_zero())
    throw StructuralError("structural_error", "nonzero form required");
  const int n = f.var_count();
  const int m = f.degree();

  PartialFermatReport report{0, {}, f};
  TermMap residual_terms = f.terms();
  for (int i = 0; i < n; ++i) {
    Exponents pure(static_cast<std::size_t>(n), 0);
    pure[static_cast<std::size_t>(i)] = m;
    bool has_pure_power = false;
    bool elsewhere = false;
    for (const auto& [e, c] : f.terms()) {
      if (e == pure) {
        has_pure_power = true;
      } else if (e[static_cast<std::size_t>(i)] > 0) {
        elsewhere = true;
      }
    }
    if (has_pure_power && !elsewhere) {
      report.power_vars.push_back(i);
      residual_terms.erase(pure);
    }
  }
  report.k = static_cast<int>(report.power_vars.size());
  report.residual =
      HomogeneousForm::from_terms(f.ring(), n, m, std::move(residual_terms));
  return report;
}

}  // namespace assocform
