#include "doctest.h"

#include "assocform/apolarity.hpp"
#include "assocform/errors.hpp"
#include "assocform/parse.hpp"

using namespace assocform;

TEST_CASE("polar action on dual forms") {
  const auto g = parse_form("x1", 2);
  CHECK(polar_apply(g, parse_form("z1^3", 2)) == parse_form("3*z1^2", 2));
  CHECK(polar_apply(parse_form("x2", 2), parse_form("z1^3", 2)).is_zero());

  // x1^2 x2 acting on z1^2 z2 contracts fully: 2! * 1!.
  const auto full = polar_apply(parse_form("x1^2*x2", 2), parse_form("z1^2*z2", 2));
  CHECK(full.degree() == 0);
  CHECK(full == parse_form("2", 2, Ring::D));
  CHECK(polar_pair(parse_form("x1^2*x2", 2), parse_form("z1^2*z2", 2)) == Rat(2));

  // Degree overflow gives the zero form.
  CHECK(polar_apply(parse_form("x1^3", 2), parse_form("z1^2", 2)).is_zero());
  CHECK_THROWS_AS(polar_apply(parse_form("z1", 2, Ring::D), parse_form("z1^3", 2)),
                  StructuralError);
}

TEST_CASE("perp in one graded piece") {
  const GradedSubspace full = GradedSubspace::full(Ring::D, 2, 3);
  CHECK(perp(full).is_zero());
  CHECK(perp(GradedSubspace::zero(Ring::D, 2, 3)) ==
        GradedSubspace::full(Ring::S, 2, 3));

  const GradedSubspace degree_four_piece = GradedSubspace::span(
      Ring::S, 2, 4,
      {parse_form("x1^4", 2), parse_form("x1^3*x2", 2), parse_form("x1*x2^3", 2),
       parse_form("x2^4", 2)});
  const GradedSubspace dual = perp(degree_four_piece);
  CHECK(dual == GradedSubspace::span(Ring::D, 2, 4, {parse_form("z1^2*z2^2", 2)}));
  CHECK(perp(dual) == degree_four_piece);
}

TEST_CASE("functionals and their dual representatives") {
  // Dual-basis functional of x1^2 x2 with n=2, m=3.
  const Functional omega = Functional::dual_basis(2, {2, 1});
  CHECK(inverse_system_of(omega) == parse_form("1/2*z1^2*z2", 2));
  CHECK(omega(parse_form("5*x1^2*x2+7*x2^3", 2)) == Rat(5));

  CHECK(inverse_system_of(Functional::zero(2, 3)).is_zero());

  // Coefficient-sum functional at n=2, m=2.
  const Functional sums(2, 2, {Rat(1), Rat(1), Rat(1)});
  CHECK(inverse_system_of(sums) ==
        parse_form("1/2*z1^2+z1*z2+1/2*z2^2", 2));
}

TEST_CASE("evaluation identity instance") {
  const Functional omega(2, 4, {Rat(2), Rat(-1), Rat(0), Rat(3), Rat(1, 2)});
  const HomogeneousForm dual = inverse_system_of(omega);
  // Direct evaluation at (2, 3) against the expanded power.
  const std::vector<Rat> a{Rat(2), Rat(3)};
  const HomogeneousForm power = parse_form("x1", 2).scaled(a[0]) +
                                parse_form("x2", 2).scaled(a[1]);
  HomogeneousForm expanded = power * power;
  expanded = expanded * expanded;  // (a1 x1 + a2 x2)^4
  CHECK(dual.evaluate(a) == omega(expanded.scaled(Rat(1, 24))));

  CHECK(parse_form("z1^2*z2", 2).evaluate({Rat(1), Rat(1)}) == Rat(1));
  CHECK(parse_form("z1^2*z2", 2).evaluate({Rat(0), Rat(0)}) == Rat(0));
}

TEST_CASE("vanishing criterion") {
  const GradedSubspace w =
      GradedSubspace::span(Ring::D, 2, 2, {parse_form("z1*z2", 2)});
  CHECK(vanishing_criterion(w, {Rat(1), Rat(0)}));
  CHECK(perp(w).contains(parse_form("x1^2", 2)));

  const GradedSubspace w2 =
      GradedSubspace::span(Ring::D, 2, 2, {parse_form("z1^2", 2)});
  CHECK_FALSE(vanishing_criterion(w2, {Rat(1), Rat(0)}));

  CHECK_THROWS_AS(vanishing_criterion(w, {Rat(0), Rat(0)}), StructuralError);
}
