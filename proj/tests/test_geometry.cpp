#include "doctest.h"

#include "assocform/apolarity.hpp"
#include "assocform/artinian.hpp"
#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"
#include "assocform/parse.hpp"

using namespace assocform;

namespace {

ProjectivePoint pt(std::initializer_list<int> values) {
  std::vector<Rat> coords;
  for (int v : values) coords.emplace_back(v);
  return ProjectivePoint(coords);
}

}  // namespace

TEST_CASE("projective points") {
  const ProjectivePoint p({Rat(0), Rat(3), Rat(6)});
  CHECK(p.coords() == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
  CHECK(p == pt({0, 2, 4}));
  CHECK(p.dual_linear_form(Ring::S) == parse_form("x2+2*x3", 3));
  CHECK(p.dual_linear_form(Ring::D) == parse_form("z2+2*z3", 3));
  CHECK_THROWS_AS(ProjectivePoint({Rat(0), Rat(0)}), StructuralError);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity_at(fermat_form(2, 4), pt({1, 0})) == 0);
  CHECK(multiplicity_at(parse_form("x1^2*x2", 2), pt({0, 1})) == 2);
  CHECK(multiplicity_at(nodal_example(2, 3), pt({1, 0})) == 2);
  CHECK(multiplicity_at(parse_form("x1*x2", 2), pt({1, 0})) == 1);
  CHECK(multiplicity_at(parse_form("x1^3", 2), pt({0, 1})) == 3);
  CHECK(multiplicity_at(parse_form("z1^2*z2^2", 2), pt({1, 0})) == 2);
}

TEST_CASE("power membership pattern") {
  const std::vector<HomogeneousForm> cubes{parse_form("x1^3", 2),
                                           parse_form("x2^3", 2)};
  // At (1,0) with ell = 1: x1^3 lies in the ideal, x1^2 does not.
  const auto pattern = veronese_membership_pattern(cubes, 4, pt({1, 0}), 1);
  CHECK(pattern.first);
  CHECK_FALSE(pattern.second);
  // The inverse system z1^2 z2^2 indeed has multiplicity 2 there.
  CHECK(multiplicity_at(macaulay_inverse_system(cubes, 4), pt({1, 0})) == 2);

  // A generic point sees no power membership at all.
  const auto generic = veronese_membership_pattern(cubes, 4, pt({1, 1}), 1);
  CHECK_FALSE(generic.first);
  CHECK_FALSE(generic.second);

  CHECK_THROWS_AS(veronese_membership_pattern(cubes, 4, pt({1, 0}), 4),
                  StructuralError);
  CHECK_THROWS_AS(
      veronese_membership_pattern({parse_form("x1^3", 2)}, 4, pt({1, 0}), 1),
      DomainError);
}

TEST_CASE("ordinary double points") {
  CHECK(is_ordinary_double_point(nodal_example(2, 3), pt({1, 0})));
  CHECK(is_ordinary_double_point(nodal_example(3, 2), pt({1, 0, 0})));
  CHECK_FALSE(is_ordinary_double_point(parse_form("x1^3", 2), pt({0, 1})));
  CHECK_FALSE(is_ordinary_double_point(parse_form("x1*x2", 2), pt({1, 1})));
  CHECK(rank_of(hessian_at(nodal_example(2, 3), pt({1, 0}))) == 1);
}

TEST_CASE("general linear position") {
  CHECK(general_linear_position({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}));
  CHECK_FALSE(
      general_linear_position({pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}));
  CHECK_FALSE(general_linear_position({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  CHECK_THROWS_AS(general_linear_position({pt({1, 0}), pt({2, 0})}),
                  StructuralError);
  CHECK_THROWS_AS(general_linear_position({}), StructuralError);
}

TEST_CASE("binary form gcd") {
  const HomogeneousForm a = parse_form("x1^2*x2", 2);
  const HomogeneousForm b = parse_form("x1*x2^2", 2);
  CHECK(binary_form_gcd(a, b) == parse_form("x1*x2", 2));

  CHECK(binary_form_gcd(parse_form("x1^2-x2^2", 2), parse_form("x1^2+2*x1*x2+x2^2", 2)) ==
        parse_form("x1+x2", 2));
  CHECK(binary_form_gcd(parse_form("x1^3", 2), parse_form("x2^3", 2)) ==
        parse_form("1", 2));
}

TEST_CASE("base locus verification") {
  // Nodal at (2,3): exact certificate at the coordinate points.
  const GradedSubspace nodal_grad =
      GradedSubspace::span(Ring::S, 2, 3, partials(nodal_example(2, 3)));
  const ZkCertificate exact =
      verify_base_locus_points(nodal_grad, {pt({1, 0}), pt({0, 1})});
  CHECK(exact.verified);
  CHECK(exact.exact);
  CHECK(exact.status() == "EXACT");

  // Fermat partials have no common zeros at all.
  const GradedSubspace fermat_grad =
      GradedSubspace::span(Ring::S, 2, 3, partials(fermat_form(2, 4)));
  CHECK_FALSE(verify_base_locus_points(fermat_grad, {pt({1, 0})}).verified);

  // Nodal at (3,2): heuristic certificate at the three coordinate points.
  const GradedSubspace ternary =
      GradedSubspace::span(Ring::S, 3, 2, partials(nodal_example(3, 2)));
  const ZkCertificate heur = verify_base_locus_points(
      ternary, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(heur.verified);
  CHECK_FALSE(heur.exact);
  CHECK(heur.status() == "HEURISTIC");
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(fermat_form(2, 4)));
  CHECK(is_smooth(fermat_form(3, 3)));
  CHECK_FALSE(is_smooth(parse_form("x1^4", 2)));
  CHECK_FALSE(is_smooth(nodal_example(2, 3)));
  // The Fermat quartic itself maps to the nodal quartic: a smooth form whose
  // associated form is singular.
  CHECK_FALSE(is_smooth(associated_form(fermat_form(2, 4))));
}

TEST_CASE("example forms") {
  CHECK(fermat_form(2, 4) == parse_form("x1^4+x2^4", 2));

  // The (2,3) nodal form collapses to 4 x1^2 x2^2.
  CHECK(nodal_example(2, 3) == parse_form("4*x1^2*x2^2", 2));

  // The (3,2) nodal form collapses to 6 x1 x2 x3.
  CHECK(nodal_example(3, 2) == parse_form("6*x1*x2*x3", 3));

  const HomogeneousForm tail = parse_form("x2^2*x3+x3^3", 3);
  CHECK(partial_fermat_form(1, 3, tail) == parse_form("x1^3+x2^2*x3+x3^3", 3));
  CHECK_THROWS_AS(partial_fermat_form(2, 3, tail), StructuralError);
  CHECK_THROWS_AS(nodal_example(2, 2), StructuralError);
}
