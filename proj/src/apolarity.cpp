#include "assocform/apolarity.hpp"

#include <utility>

#include "assocform/errors.hpp"

namespace assocform {

HomogeneousForm polar_apply(const HomogeneousForm& g, const HomogeneousForm& F) {
  if (g.ring() != Ring::S || F.ring() != Ring::D)
    throw StructuralError("structural_error",
                          "polar pairing needs an S-form acting on a D-form");
  if (g.var_count() != F.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  const int n = g.var_count();
  const int result_degree = F.degree() >= g.degree() ? F.degree() - g.degree() : 0;
  HomogeneousForm out(Ring::D, n, result_degree);
  if (F.degree() < g.degree()) return out;

  TermMap terms;
  for (const auto& [alpha, a] : g.terms()) {
    for (const auto& [beta, b] : F.terms()) {
      Exponents gamma(static_cast<std::size_t>(n));
      Int falling = 1;
      bool vanishes = false;
      for (int i = 0; i < n; ++i) {
        const int ai = alpha[static_cast<std::size_t>(i)];
        const int bi = beta[static_cast<std::size_t>(i)];
        if (bi < ai) {
          vanishes = true;
          break;
        }
        gamma[static_cast<std::size_t>(i)] = bi - ai;
        for (int k = 0; k < ai; ++k) falling *= (bi - k);
      }
      if (vanishes) continue;
      const Rat contribution = a * b * Rat(falling);
      auto [it, inserted] = terms.emplace(std::move(gamma), contribution);
      if (!inserted) {
        it->second += contribution;
        if (sgn(it->second) == 0) terms.erase(it);
      }
    }
  }
  return HomogeneousForm::from_terms(Ring::D, n, result_degree, std::move(terms));
}

Rat polar_pair(const HomogeneousForm& f, const HomogeneousForm& F) {
  if (f.degree() != F.degree())
    throw StructuralError("structural_error", "pairing needs equal degrees");
  const HomogeneousForm constant = polar_apply(f, F);
  if (constant.is_zero()) return Rat(0);
  return constant.leading_term().second;
}

GradedSubspace perp(const GradedSubspace& subspace) {
  const Ring target = subspace.ring() == Ring::S ? Ring::D : Ring::S;
  const MonomialBasis& basis = subspace.monomials();
  Mat scaled = subspace.reduced_basis();
  for (int c = 0; c < scaled.cols(); ++c) {
    const Rat weight(factorial_product(basis.at(c)));
    for (int r = 0; r < scaled.rows(); ++r) scaled.at(r, c) *= weight;
  }
  return GradedSubspace::from_rows(target, subspace.var_count(), subspace.degree(),
                                   null_space(scaled));
}

Functional::Functional(int n, int degree, std::vector<Rat> values)
    : n_(n), degree_(degree), monomials_(n, degree), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != monomials_.size())
    throw StructuralError("structural_error",
                          "functional value vector length mismatch");
}

Functional Functional::zero(int n, int degree) {
  return Functional(n, degree,
                    std::vector<Rat>(static_cast<std::size_t>(
                        MonomialBasis::dimension(n, degree))));
}

Functional Functional::dual_basis(int n, const Exponents& exponents) {
  Functional out = zero(n, exponent_sum(exponents));
  out.values_[static_cast<std::size_t>(out.monomials_.index_of(exponents))] = 1;
  return out;
}

Rat Functional::operator()(const HomogeneousForm& f) const {
  if (f.ring() != Ring::S)
    throw StructuralError("structural_error", "functionals act on S-forms");
  if (f.var_count() != n_ || f.degree() != degree_)
    throw StructuralError("structural_error", "form outside the functional's piece");
  Rat total = 0;
  for (const auto& [e, c] : f.terms())
    total += c * values_[static_cast<std::size_t>(monomials_.index_of(e))];
  return total;
}

HomogeneousForm inverse_system_of(const Functional& omega) {
  TermMap terms;
  const MonomialBasis& basis = omega.monomials();
  for (int i = 0; i < basis.size(); ++i) {
    const Rat& value = omega.values()[static_cast<std::size_t>(i)];
    if (sgn(value) == 0) continue;
    terms[basis.at(i)] = value / Rat(factorial_product(basis.at(i)));
  }
  return HomogeneousForm::from_terms(Ring::D, omega.var_count(), omega.degree(),
                                     std::move(terms));
}

bool vanishing_criterion(const GradedSubspace& subspace, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != subspace.var_count())
    throw StructuralError("structural_error", "point dimension mismatch");
  bool nonzero = false;
  for (const Rat& a : point) nonzero = nonzero || sgn(a) != 0;
  if (!nonzero)
    throw StructuralError("structural_error", "vanishing test needs a nonzero point");

  const Ring dual_ring = subspace.ring() == Ring::S ? Ring::D : Ring::S;
  const int n = subspace.var_count();
  TermMap linear_terms;
  for (int i = 0; i < n; ++i) {
    if (sgn(point[static_cast<std::size_t>(i)]) == 0) continue;
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    linear_terms[std::move(e)] = point[static_cast<std::size_t>(i)];
  }
  const HomogeneousForm dual_linear =
      HomogeneousForm::from_terms(dual_ring, n, 1, std::move(linear_terms));
  const bool by_membership = perp(subspace).contains(dual_linear.pow(subspace.degree()));

  bool by_evaluation = true;
  for (const HomogeneousForm& f : subspace.basis_forms())
    by_evaluation = by_evaluation && sgn(f.evaluate(point)) == 0;
  if (by_membership != by_evaluation)
    throw std::logic_error("vanishing criterion routes disagree");
  return by_membership;
}

}  // namespace assocform
