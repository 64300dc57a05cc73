#include "assocform/artinian.hpp"

#include <string>
#include <utility>

#include "assocform/apolarity.hpp"
#include "assocform/errors.hpp"

namespace assocform {

IdealSlice ideal_piece(const std::vector<HomogeneousForm>& generators, int t, int n,
                       Ring ring) {
  if (t < 0) throw StructuralError("structural_error", "negative degree");
  for (const HomogeneousForm& g : generators)
    if (g.ring() != ring || g.var_count() != n)
      throw StructuralError("structural_error", "generator outside the ambient ring");

  std::vector<HomogeneousForm> spanners;
  for (const HomogeneousForm& g : generators) {
    if (g.is_zero() || g.degree() > t) continue;
    const MonomialBasis cofactors(n, t - g.degree());
    for (int i = 0; i < cofactors.size(); ++i)
      spanners.push_back(HomogeneousForm::monomial(ring, n, cofactors.at(i), Rat(1)) * g);
  }
  IdealSlice slice{t, GradedSubspace::span(ring, n, t, spanners), 0};
  slice.quotient_dim = slice.piece.ambient_dim() - slice.piece.dim();
  return slice;
}

std::vector<int> hilbert_function(const std::vector<HomogeneousForm>& generators,
                                  int t_max, int n, Ring ring) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t)
    out.push_back(ideal_piece(generators, t, n, ring).quotient_dim);
  return out;
}

CompleteIntersectionCheck regular_sequence_check(
    const std::vector<HomogeneousForm>& generators) {
  if (generators.empty())
    throw StructuralError("structural_error", "empty generator list");
  const int n = generators.front().var_count();
  const int d = generators.front().degree();
  if (static_cast<int>(generators.size()) != n)
    throw StructuralError("structural_error",
                          "need exactly as many forms as variables");
  if (d < 1) throw StructuralError("structural_error", "generators must have degree >= 1");
  for (const HomogeneousForm& g : generators)
    if (g.ring() != generators.front().ring() || g.var_count() != n || g.degree() != d)
      throw StructuralError("structural_error",
                            "generators must share one ring, variable count and degree");

  CompleteIntersectionCheck check;
  check.socle_degree = n * (d - 1);
  check.socle_dim =
      ideal_piece(generators, check.socle_degree, n, generators.front().ring()).quotient_dim;
  check.overflow_dim =
      ideal_piece(generators, check.socle_degree + 1, n, generators.front().ring())
          .quotient_dim;
  check.is_regular = check.overflow_dim == 0;
  if (check.is_regular && check.socle_dim != 1)
    throw std::logic_error("regular sequence with socle dimension != 1");
  return check;
}

HomogeneousForm macaulay_inverse_system(const std::vector<HomogeneousForm>& generators,
                                        int socle_degree) {
  if (generators.empty())
    throw StructuralError("structural_error", "empty generator list");
  const int n = generators.front().var_count();
  const IdealSlice top = ideal_piece(generators, socle_degree, n);
  if (top.quotient_dim != 1)
    throw DomainError("not_gorenstein",
                      "socle certificate failed: quotient dimension at degree " +
                          std::to_string(socle_degree) + " is " +
                          std::to_string(top.quotient_dim) + ", expected 1");
  const GradedSubspace line = perp(top.piece);
  return line.basis_forms().front().normalized();
}

std::vector<HomogeneousForm> partials(const HomogeneousForm& f) {
  std::vector<HomogeneousForm> out;
  out.reserve(static_cast<std::size_t>(f.var_count()));
  for (int i = 0; i < f.var_count(); ++i) out.push_back(f.derivative(i));
  return out;
}

HomogeneousForm associated_form_of_sequence(
    const std::vector<HomogeneousForm>& generators) {
  const CompleteIntersectionCheck check = regular_sequence_check(generators);
  if (!check.is_regular)
    throw DomainError("resultant_divisor",
                      "not a regular sequence: resultant divisor (quotient dimension " +
                          std::to_string(check.overflow_dim) + " past the socle degree)");
  return macaulay_inverse_system(generators, check.socle_degree);
}

HomogeneousForm associated_form(const HomogeneousForm& f) {
  if (f.ring() != Ring::S)
    throw StructuralError("structural_error", "associated form expects an S-form");
  if (f.degree() < 2)
    throw StructuralError("structural_error", "degree must be at least 2");
  const std::vector<HomogeneousForm> grad = partials(f);
  const CompleteIntersectionCheck check = regular_sequence_check(grad);
  if (!check.is_regular)
    throw DomainError("degenerate_form", "degenerate: discriminant divisor");
  return macaulay_inverse_system(grad, check.socle_degree);
}

GradedSubspace gradient_point(const HomogeneousForm& F, int order) {
  if (F.ring() != Ring::D)
    throw StructuralError("structural_error", "gradient points live in D");
  if (order < 0 || order > F.degree())
    throw StructuralError("structural_error", "derivative order out of range");
  const int n = F.var_count();
  const MonomialBasis operators(n, order);
  std::vector<HomogeneousForm> images;
  images.reserve(static_cast<std::size_t>(operators.size()));
  for (int i = 0; i < operators.size(); ++i)
    images.push_back(
        polar_apply(HomogeneousForm::monomial(Ring::S, n, operators.at(i), Rat(1)), F));
  return GradedSubspace::span(Ring::D, n, F.degree() - order, images);
}

GradedSubspace hilbert_point(const std::vector<HomogeneousForm>& generators, int t,
                             int n, Ring ring) {
  return ideal_piece(generators, t, n, ring).piece;
}

GradedSubspace apolar_slice(const HomogeneousForm& F, int t) {
  if (F.ring() != Ring::D)
    throw StructuralError("structural_error", "annihilator slices expect a D-form");
  if (t < 0 || t > F.degree())
    throw StructuralError("structural_error", "slice degree out of range");
  return perp(gradient_point(F, F.degree() - t));
}

std::vector<HomogeneousForm> apolar_generators(const HomogeneousForm& F) {
  std::vector<HomogeneousForm> out;
  for (int t = 1; t <= F.degree(); ++t) {
    for (const HomogeneousForm& g : apolar_slice(F, t).basis_forms()) out.push_back(g);
  }
  return out;
}

int agr_critical_degree(int n, int d) { return n * (d - 1) - 1; }

namespace {

int agr_quotient_dim(const GradedSubspace& U) {
  const int n = U.var_count();
  const int d = U.degree();
  if (U.ring() != Ring::S)
    throw StructuralError("structural_error", "agr expects a subspace of S_d");
  if (U.dim() != n)
    throw StructuralError("structural_error",
                          "agr expects an n-dimensional subspace of S_d");
  const int critical = agr_critical_degree(n, d);
  if (critical < 0)
    throw StructuralError("structural_error", "degree too small for agr");
  return ideal_piece(U.basis_forms(), critical, n).quotient_dim;
}

}  // namespace

bool in_agr_domain(const GradedSubspace& U) {
  return agr_quotient_dim(U) == U.var_count();
}

GradedSubspace agr(const GradedSubspace& U) {
  const int n = U.var_count();
  const int critical = agr_critical_degree(n, U.degree());
  const int quotient = agr_quotient_dim(U);
  if (quotient != n)
    throw DomainError("agr_domain",
                      "quotient dimension at degree " + std::to_string(critical) +
                          " is " + std::to_string(quotient) + ", expected " +
                          std::to_string(n));
  return perp(ideal_piece(U.basis_forms(), critical, n).piece);
}

}  // namespace assocform
