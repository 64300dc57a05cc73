#include "doctest.h"

#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"
#include "assocform/parse.hpp"
#include "assocform/stability.hpp"

using namespace assocform;

TEST_CASE("one-parameter subgroups") {
  CHECK_THROWS_AS(OneParamSubgroup({1, 1}), StructuralError);
  CHECK(OneParamSubgroup::trivial(3).is_trivial());
  CHECK_FALSE(OneParamSubgroup({2, -1, -1}).is_trivial());
}

TEST_CASE("weights and initial parts") {
  const OneParamSubgroup lambda({1, -1});
  const HomogeneousForm f = parse_form("x1^2*x2^2+x1^3*x2", 2);
  const WeightInit wi = weight_and_initial_part(f, lambda);
  CHECK(wi.weight == 0);
  CHECK(wi.initial_part == parse_form("x1^2*x2^2", 2));

  const WeightInit power = weight_and_initial_part(parse_form("x1^4", 2), lambda);
  CHECK(power.weight == 4);
  CHECK(power.initial_part == parse_form("x1^4", 2));

  // Swapping the variables and negating the weights is a symmetry.
  const HomogeneousForm sym = parse_form("x1^3*x2+x1*x2^3", 2);
  CHECK(weight_and_initial_part(sym, lambda).weight ==
        weight_and_initial_part(sym, lambda.negated()).weight);

  CHECK_THROWS_AS(weight_and_initial_part(HomogeneousForm(Ring::S, 2, 3), lambda),
                  StructuralError);
}

TEST_CASE("limits of forms") {
  const OneParamSubgroup lambda({1, -1});
  const auto limit = lambda_limit(parse_form("x1^2*x2^2+x1^3*x2", 2), lambda);
  REQUIRE(limit.has_value());
  CHECK(*limit == parse_form("x1^2*x2^2", 2));

  CHECK_FALSE(lambda_limit(parse_form("x1^3*x2", 2), lambda.negated()).has_value());
  CHECK_FALSE(lambda_limit(fermat_form(2, 4), lambda).has_value());

  // Strictly positive minimal weight: the limit is the zero form.
  const auto vanishing = lambda_limit(parse_form("x1^3*x2", 2), lambda);
  REQUIRE(vanishing.has_value());
  CHECK(vanishing->is_zero());

  // Trivial subgroup leaves everything in place.
  const auto fixed =
      lambda_limit(fermat_form(2, 4), OneParamSubgroup::trivial(2));
  REQUIRE(fixed.has_value());
  CHECK(*fixed == fermat_form(2, 4));
}

TEST_CASE("limits of subspaces") {
  const OneParamSubgroup lambda({1, -1});
  const GradedSubspace u = GradedSubspace::span(
      Ring::D, 2, 3, {parse_form("z1^3+z2^3", 2), parse_form("z2^3", 2)});
  const GradedSubspace expected = GradedSubspace::span(
      Ring::D, 2, 3, {parse_form("z1^3", 2), parse_form("z2^3", 2)});
  CHECK(limit_subspace(u, lambda) == expected);
  CHECK(limit_subspace(u, OneParamSubgroup::trivial(2)) == u);
  CHECK(limit_subspace(expected, lambda) == expected);

  // A case where the initial parts are not the leading monomials.
  const GradedSubspace mixed = GradedSubspace::span(
      Ring::S, 2, 2, {parse_form("x1*x2+x2^2", 2)});
  CHECK(limit_subspace(mixed, lambda) ==
        GradedSubspace::span(Ring::S, 2, 2, {parse_form("x2^2", 2)}));
  CHECK(limit_subspace(mixed, lambda.negated()) ==
        GradedSubspace::span(Ring::S, 2, 2, {parse_form("x1*x2", 2)}));
}

TEST_CASE("torus destabilization") {
  const OneParamSubgroup lambda({1, -1});
  CHECK(torus_destabilizes(parse_form("x1^4", 2), lambda));
  CHECK_FALSE(torus_destabilizes(fermat_form(2, 4), lambda));
  CHECK(torus_destabilizes(parse_form("x1^2*x2", 2), lambda));
  CHECK_THROWS_AS(
      torus_destabilizes(parse_form("x1^2", 2), OneParamSubgroup::trivial(2)),
      StructuralError);
}

TEST_CASE("torus semistability") {
  CHECK(torus_semistable(fermat_form(2, 4)));
  CHECK(torus_semistable(fermat_form(3, 3)));
  CHECK_FALSE(torus_semistable(parse_form("x1^4", 2)));
  CHECK_FALSE(torus_semistable(parse_form("x1^2*x2+x1^3", 2)));
  CHECK(torus_semistable(nodal_example(2, 3)));
  CHECK(torus_semistable(parse_form("x1^2*x2^2", 2)));
  CHECK(torus_semistable(parse_form("x1^3*x2+x1*x2^3", 2)));
}

TEST_CASE("gradient fiber kernels") {
  const DirectSumReport fermat = ds_kernel(fermat_form(3, 4));
  CHECK(fermat.k == 3);
  CHECK(fermat.torus_dim == 2);
  CHECK(fermat.is_direct_sum);
  CHECK(fermat.kernel ==
        GradedSubspace::span(Ring::S, 3, 4,
                             {parse_form("x1^4", 3), parse_form("x2^4", 3),
                              parse_form("x3^4", 3)}));

  // Frozen instance: kernel of x1^4 + x1 x2^3 is the line through the form.
  const HomogeneousForm atomic = parse_form("x1^4+x1*x2^3", 2);
  const DirectSumReport report = ds_kernel(atomic);
  CHECK(report.k == 1);
  CHECK_FALSE(report.is_direct_sum);
  CHECK(report.kernel.contains(atomic));

  // Two blocks.
  const HomogeneousForm two_block = parse_form("x1^4+x2^4+x2*x3^3", 3);
  const DirectSumReport blocks = ds_kernel(two_block);
  CHECK(blocks.k == 2);
  CHECK(blocks.kernel.contains(parse_form("x1^4", 3)));
  CHECK(blocks.kernel.contains(parse_form("x2^4+x2*x3^3", 3)));

  CHECK_THROWS_AS(ds_kernel(parse_form("x1^4", 2)), DomainError);
}

TEST_CASE("one-parameter direct sum certificates") {
  const OneParamSubgroup lambda({1, -1});
  const auto split = one_ps_direct_sum_certificate(fermat_form(2, 4), lambda);
  REQUIRE(split.has_value());
  CHECK(split->low == std::vector<int>{1});
  CHECK(split->high == std::vector<int>{0});

  // Cross terms defeat the weight hypothesis.
  CHECK_FALSE(one_ps_direct_sum_certificate(parse_form("x1^3*x2+x1*x2^3", 2), lambda)
                  .has_value());

  CHECK_THROWS_AS(
      one_ps_direct_sum_certificate(fermat_form(2, 4), OneParamSubgroup::trivial(2)),
      StructuralError);
}

TEST_CASE("partial Fermat detection in coordinates") {
  const PartialFermatReport fermat = partial_fermat_in_coordinates(fermat_form(3, 4));
  CHECK(fermat.k == 3);
  CHECK(fermat.residual.is_zero());

  const PartialFermatReport one =
      partial_fermat_in_coordinates(parse_form("z1^3+z2^2*z3+z2*z3^2", 3));
  CHECK(one.k == 1);
  CHECK(one.power_vars == std::vector<int>{0});
  CHECK(one.residual == parse_form("z2^2*z3+z2*z3^2", 3));

  const PartialFermatReport none =
      partial_fermat_in_coordinates(parse_form("x1^3*x2+x1*x2^3", 2));
  CHECK(none.k == 0);

  // A pure power with an unused variable still counts once.
  const PartialFermatReport power = partial_fermat_in_coordinates(parse_form("x1^4", 2));
  CHECK(power.k == 1);
  CHECK(power.residual.is_zero());
}
