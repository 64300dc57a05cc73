#include "doctest.h"

#include "assocform/errors.hpp"
#include "assocform/matrix.hpp"
#include "assocform/parse.hpp"
#include "assocform/subspace.hpp"

using namespace assocform;

namespace {

Mat from_rows(const std::vector<std::vector<int>>& rows) {
  Mat m(0, rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (const auto& row : rows) {
    std::vector<Rat> converted(row.begin(), row.end());
    m.append_row(converted);
  }
  return m;
}

}  // namespace

TEST_CASE("reduced echelon form is canonical") {
  Mat m = from_rows({{2, 4, 6}, {1, 2, 4}});
  const auto pivots = rref_in_place(m);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 2) == 1);

  // Scaled and reordered rows give the identical echelon matrix.
  Mat other = from_rows({{3, 6, 12}, {4, 8, 12}});
  rref_in_place(other);
  CHECK(m == other);
}

TEST_CASE("null space and membership") {
  const Mat m = from_rows({{1, 0, -1}, {0, 1, 2}});
  const Mat kernel = null_space(m);
  REQUIRE(kernel.rows() == 1);
  CHECK(kernel.at(0, 0) == 1);
  CHECK(kernel.at(0, 1) == -2);
  CHECK(kernel.at(0, 2) == 1);

  const Mat rref = row_space(m);
  CHECK(in_row_space(rref, {Rat(1), Rat(1), Rat(1)}));
  CHECK_FALSE(in_row_space(rref, {Rat(1), Rat(1), Rat(2)}));
}

TEST_CASE("determinant and inverse") {
  Mat m(2, 2);
  m.at(0, 0) = Rat(1, 3);
  m.at(0, 1) = Rat(2);
  m.at(1, 0) = Rat(1);
  m.at(1, 1) = Rat(1, 2);
  CHECK(determinant(m) == Rat(1, 6) - Rat(2));
  CHECK(m * inverse(m) == Mat::identity(2));

  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), StructuralError);
}

TEST_CASE("subspace operations") {
  // Dependent spanners collapse.
  const auto one = parse_form("x1^2", 2);
  const auto two = parse_form("2*x1^2", 2);
  const GradedSubspace span1 = GradedSubspace::span(Ring::S, 2, 2, {one, two});
  CHECK(span1.dim() == 1);

  const GradedSubspace sums = GradedSubspace::span(
      Ring::S, 2, 2, {parse_form("x1^2", 2), parse_form("x2^2", 2)});
  CHECK(sums.contains(parse_form("x1^2-x2^2", 2)));
  CHECK_FALSE(sums.contains(parse_form("x1*x2", 2)));

  const GradedSubspace left = GradedSubspace::span(
      Ring::S, 2, 2, {parse_form("x1^2", 2), parse_form("x1*x2", 2)});
  const GradedSubspace right = GradedSubspace::span(
      Ring::S, 2, 2, {parse_form("x1*x2", 2), parse_form("x2^2", 2)});
  const GradedSubspace expected =
      GradedSubspace::span(Ring::S, 2, 2, {parse_form("x1*x2", 2)});
  CHECK(left.intersect(right) == expected);
  CHECK(left.sum(right) == GradedSubspace::full(Ring::S, 2, 2));

  CHECK_THROWS_AS(
      GradedSubspace::span(Ring::S, 2, 2, {parse_form("x1^3", 2)}),
      StructuralError);
  CHECK_THROWS_AS(left.intersect(GradedSubspace::full(Ring::S, 2, 3)),
                  StructuralError);
}

TEST_CASE("grevlex monomial order") {
  const MonomialBasis basis(2, 3);
  REQUIRE(basis.size() == 4);
  CHECK(basis.at(0) == Exponents{3, 0});
  CHECK(basis.at(1) == Exponents{2, 1});
  CHECK(basis.at(2) == Exponents{1, 2});
  CHECK(basis.at(3) == Exponents{0, 3});

  const MonomialBasis ternary(3, 2);
  REQUIRE(ternary.size() == 6);
  CHECK(ternary.at(0) == Exponents{2, 0, 0});
  CHECK(ternary.at(1) == Exponents{1, 1, 0});
  CHECK(ternary.at(2) == Exponents{0, 2, 0});
  CHECK(ternary.at(3) == Exponents{1, 0, 1});
  CHECK(MonomialBasis::dimension(3, 2) == 6);
}
