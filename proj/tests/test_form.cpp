#include "doctest.h"

#include "assocform/errors.hpp"
#include "assocform/form.hpp"
#include "assocform/parse.hpp"

using namespace assocform;

namespace {

HomogeneousForm sform(const std::string& text, int n) {
  return parse_form(text, n, Ring::S);
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  CHECK(sform("x1^2", 2) + sform("x2^2", 2) == sform("x1^2+x2^2", 2));
  CHECK(sform("x1", 2) * sform("x1", 2) == sform("x1^2", 2));

  const HomogeneousForm zero = sform("x1^2+x2^2", 2).scaled(Rat(0));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 2);

  CHECK_THROWS_AS(sform("x1^2", 2) + sform("x1^3", 2), StructuralError);
  CHECK_THROWS_AS(sform("x1^2", 2) + sform("x1^2", 3), StructuralError);
  CHECK_THROWS_AS(sform("x1", 2) * parse_form("z1", 2, Ring::D), StructuralError);
}

TEST_CASE("partial derivatives") {
  CHECK(sform("x1^3", 2).derivative(0) == sform("3*x1^2", 2));
  CHECK(sform("x1^3", 2).derivative(1).is_zero());
  CHECK(sform("x1^2*x2", 2).derivative(0) == sform("2*x1*x2", 2));

  // Degree-0 input differentiates to the zero form, not an error.
  CHECK(parse_form("5", 2).derivative(0).is_zero());
  CHECK_THROWS_AS(sform("x1^2", 2).derivative(2), StructuralError);
}

TEST_CASE("linear changes of variables") {
  const HomogeneousForm f = sform("x1^2*x2", 2);

  CHECK(apply_linear_change(f, LinearChange::identity(2)) == f);

  Mat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(apply_linear_change(f, LinearChange(swap)) == sform("x1*x2^2", 2));

  // x1 -> x1 + x2 expands the square by the binomial theorem.
  Mat shear = Mat::identity(2);
  shear.at(0, 1) = 1;
  CHECK(apply_linear_change(sform("x1^2", 2), LinearChange(shear)) ==
        sform("x1^2+2*x1*x2+x2^2", 2));

  Mat singular(2, 2);
  singular.at(0, 0) = 1;
  CHECK_THROWS_AS(LinearChange{singular}, StructuralError);
}

TEST_CASE("linear change determinant is cached correctly") {
  Mat m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 3;
  m.at(1, 1) = 2;
  const LinearChange g{m};
  CHECK(g.determinant() == Rat(-2));
  CHECK(g.compose(g.inverse()).matrix() == Mat::identity(2));
  CHECK(g.contragredient().matrix() == inverse(m).transposed());
}

TEST_CASE("normalization picks the primitive representative") {
  const HomogeneousForm f = sform("x1^2+x2^2", 2).scaled(Rat(-3, 7));
  const HomogeneousForm norm = f.normalized();
  CHECK(norm == sform("x1^2+x2^2", 2));
  CHECK(f.proportional_to(sform("x1^2+x2^2", 2)));
  CHECK_FALSE(f.proportional_to(sform("x1^2-x2^2", 2)));
}

TEST_CASE("variable renaming embeds forms into larger rings") {
  const HomogeneousForm g = sform("x1^3+x1*x2^2", 2);
  const HomogeneousForm embedded = rename_variables(g, 4, {2, 3});
  CHECK(embedded == sform("x3^3+x3*x4^2", 4));
  CHECK_THROWS_AS(rename_variables(g, 4, {2, 2}), StructuralError);
}

TEST_CASE("evaluation") {
  const HomogeneousForm f = sform("x1^2*x2-2*x2^3", 2);
  CHECK(f.evaluate({Rat(3), Rat(1)}) == Rat(7));
  CHECK(f.evaluate({Rat(0), Rat(0)}) == Rat(0));
}
