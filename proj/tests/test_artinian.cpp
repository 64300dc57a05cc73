#include "doctest.h"

#include "assocform/apolarity.hpp"
#include "assocform/artinian.hpp"
#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"
#include "assocform/parse.hpp"

using namespace assocform;

namespace {

std::vector<HomogeneousForm> gens(std::initializer_list<const char*> texts, int n) {
  std::vector<HomogeneousForm> out;
  for (const char* t : texts) out.push_back(parse_form(t, n, Ring::S));
  return out;
}

}  // namespace

TEST_CASE("ideal slices") {
  const IdealSlice slice = ideal_piece(gens({"x1^3", "x2^3"}, 2), 4, 2);
  CHECK(slice.piece ==
        GradedSubspace::span(Ring::S, 2, 4,
                             {parse_form("x1^4", 2), parse_form("x1^3*x2", 2),
                              parse_form("x1*x2^3", 2), parse_form("x2^4", 2)}));
  CHECK(slice.quotient_dim == 1);

  CHECK(ideal_piece(gens({"x1", "x2"}, 2), 2, 2).piece ==
        GradedSubspace::full(Ring::S, 2, 2));
  CHECK(ideal_piece(gens({"x1", "x2"}, 2), 2, 2).quotient_dim == 0);

  const IdealSlice empty = ideal_piece({}, 3, 2);
  CHECK(empty.piece.is_zero());
  CHECK(empty.quotient_dim == 4);
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(gens({"x1^3", "x2^3"}, 2), 5, 2) ==
        std::vector<int>{1, 2, 3, 2, 1, 0});

  // The zero ideal gives the binomial sequence.
  CHECK(hilbert_function({}, 4, 3) == std::vector<int>{1, 3, 6, 10, 15});

  // Partial derivatives of the nodal form at (n, d) = (2, 3): dimension n at
  // the subcritical degree.
  const HomogeneousForm nodal = nodal_example(2, 3);
  const std::vector<int> h = hilbert_function(partials(nodal), 3, 2);
  CHECK(h[3] == 2);
}

TEST_CASE("regular sequence detection") {
  const CompleteIntersectionCheck fermat =
      regular_sequence_check(gens({"x1^3", "x2^3", "x3^3"}, 3));
  CHECK(fermat.is_regular);
  CHECK(fermat.socle_degree == 6);
  CHECK(fermat.socle_dim == 1);
  CHECK(fermat.overflow_dim == 0);

  const CompleteIntersectionCheck bad =
      regular_sequence_check(gens({"x1^3", "x1^2*x2"}, 2));
  CHECK_FALSE(bad.is_regular);
  CHECK(bad.overflow_dim > 0);

  CHECK(regular_sequence_check(partials(fermat_form(2, 4))).is_regular);
  CHECK_THROWS_AS(regular_sequence_check(gens({"x1^2", "x2^3"}, 2)), StructuralError);
  CHECK_THROWS_AS(regular_sequence_check(gens({"x1^2"}, 2)), StructuralError);
}

TEST_CASE("Macaulay inverse systems") {
  CHECK(macaulay_inverse_system(gens({"x1^3", "x2^3"}, 2), 4) ==
        parse_form("z1^2*z2^2", 2));

  // Fermat partials: the product of all dual variables to the d-1 power.
  CHECK(macaulay_inverse_system(gens({"x1^3", "x2^3", "x3^3"}, 3), 6) ==
        parse_form("z1^2*z2^2*z3^2", 3));

  // Degenerate partials fail the socle certificate.
  CHECK_THROWS_AS(
      macaulay_inverse_system(partials(parse_form("x1^4", 2)), 4), DomainError);
}

TEST_CASE("associated forms of sequences") {
  CHECK(associated_form_of_sequence(gens({"x1^3", "x2^3"}, 2)) ==
        parse_form("z1^2*z2^2", 2));

  // Only the span matters.
  CHECK(associated_form_of_sequence(gens({"x1^3+x2^3", "x2^3"}, 2))
            .proportional_to(associated_form_of_sequence(gens({"x1^3", "x2^3"}, 2))));

  CHECK_THROWS_AS(associated_form_of_sequence(gens({"x1^2*x2", "x1*x2^2"}, 2)),
                  DomainError);
}

TEST_CASE("associated forms of hypersurfaces") {
  CHECK(associated_form(parse_form("x1^4+x2^4", 2)) == parse_form("z1^2*z2^2", 2));

  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    Exponents all(static_cast<std::size_t>(n), d - 1);
    CHECK(associated_form(fermat_form(n, d + 1)) ==
          HomogeneousForm::monomial(Ring::D, n, all, Rat(1)));
  }

  CHECK_THROWS_AS(associated_form(parse_form("x1^4", 2)), DomainError);
  CHECK_THROWS_WITH_AS(associated_form(parse_form("x1^4", 2)),
                       doctest::Contains("discriminant"), DomainError);
}

TEST_CASE("gradient points") {
  const HomogeneousForm f = parse_form("z1^2*z2^2", 2);
  CHECK(gradient_point(f, 1) ==
        GradedSubspace::span(Ring::D, 2, 3,
                             {parse_form("z1*z2^2", 2), parse_form("z1^2*z2", 2)}));
  CHECK(gradient_point(f, 1).dim() == 2);

  // Top order leaves the constants.
  CHECK(gradient_point(f, 4).dim() == 1);
  CHECK(gradient_point(f, 4).degree() == 0);
  CHECK(gradient_point(f, 0) == GradedSubspace::span(Ring::D, 2, 4, {f}));

  CHECK(gradient_point(parse_form("z1^4+z2^4", 2), 1) ==
        GradedSubspace::span(Ring::D, 2, 3,
                             {parse_form("z1^3", 2), parse_form("z2^3", 2)}));
}

TEST_CASE("Hilbert points") {
  CHECK(hilbert_point(gens({"x1^3", "x2^3"}, 2), 3, 2) ==
        GradedSubspace::span(Ring::S, 2, 3,
                             {parse_form("x1^3", 2), parse_form("x2^3", 2)}));
  CHECK(hilbert_point(gens({"x1^3", "x2^3"}, 2), 2, 2).is_zero());

  // Duality instance: the perp of the first gradient point of z1^2 z2^2.
  CHECK(perp(gradient_point(parse_form("z1^2*z2^2", 2), 1)) ==
        hilbert_point(gens({"x1^3", "x2^3"}, 2), 3, 2));
}

TEST_CASE("annihilator slices") {
  const HomogeneousForm f = parse_form("z1^2*z2^2", 2);
  CHECK(apolar_slice(f, 3) ==
        hilbert_point(gens({"x1^3", "x2^3"}, 2), 3, 2));
  CHECK(apolar_slice(f, 4).dim() == 4);

  const auto apolar_gens = apolar_generators(f);
  CHECK(ideal_piece(apolar_gens, 4, 2).quotient_dim == 1);
}

TEST_CASE("agr and its domain") {
  // Nodal example at (2, 3): the span of the dual cubes.
  const GradedSubspace nodal_grad =
      GradedSubspace::span(Ring::S, 2, 3, partials(nodal_example(2, 3)));
  CHECK(in_agr_domain(nodal_grad));
  CHECK(agr(nodal_grad) ==
        GradedSubspace::span(Ring::D, 2, 3,
                             {parse_form("z1^3", 2), parse_form("z2^3", 2)}));

  // A regular-sequence span: agr equals the gradient point of the associated
  // form.
  const GradedSubspace cubes = GradedSubspace::span(
      Ring::S, 2, 3, {parse_form("x1^3", 2), parse_form("x2^3", 2)});
  CHECK(in_agr_domain(cubes));
  CHECK(agr(cubes) == gradient_point(parse_form("z1^2*z2^2", 2), 1));

  // In the domain even though not a regular sequence.
  const GradedSubspace degenerate = GradedSubspace::span(
      Ring::S, 2, 3, {parse_form("x1^3", 2), parse_form("x1^2*x2", 2)});
  CHECK(in_agr_domain(degenerate));
  CHECK(ideal_piece(degenerate.basis_forms(), 3, 2).quotient_dim == 2);

  // Outside the domain: the quotient dimension is reported in the error.
  const GradedSubspace outside = GradedSubspace::span(
      Ring::S, 2, 4, {parse_form("x1^4", 2), parse_form("x1^3*x2", 2)});
  CHECK_FALSE(in_agr_domain(outside));
  CHECK_THROWS_WITH_AS(agr(outside), doctest::Contains("expected 2"), DomainError);
}
