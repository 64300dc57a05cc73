#include "doctest.h"

#include "assocform/errors.hpp"
#include "assocform/parse.hpp"

using namespace assocform;

TEST_CASE("grammar basics") {
  const HomogeneousForm f = parse_form("x1^2*x2 - 1/2*x3^3", 3);
  CHECK(f.ring() == Ring::S);
  CHECK(f.degree() == 3);
  CHECK(f.coefficient({2, 1, 0}) == Rat(1));
  CHECK(f.coefficient({0, 0, 3}) == Rat(-1, 2));
  CHECK(f.term_count() == 2);

  // z-variables land in the dual ring.
  CHECK(parse_form("z1^2*z2^2", 2).ring() == Ring::D);

  // Whitespace is ignored, coefficients may sit after variables via '*'.
  CHECK(parse_form(" 3 * x1 ^ 2 ", 1) == parse_form("3*x1^2", 1));
}

TEST_CASE("grammar rejections") {
  CHECK_THROWS_WITH_AS(parse_form("x1 + x2^2", 2), doctest::Contains("inhomogeneous"),
                       ParseError);
  CHECK_THROWS_AS(parse_form("x3", 2), ParseError);           // unknown variable
  CHECK_THROWS_AS(parse_form("x1*z1", 2), ParseError);        // mixed letters
  CHECK_THROWS_AS(parse_form("", 2), ParseError);
  CHECK_THROWS_AS(parse_form("x1^", 2), ParseError);
  CHECK_THROWS_AS(parse_form("2*", 2), ParseError);
  CHECK_THROWS_AS(parse_form("x1", 2, Ring::D), ParseError);  // wrong ring
}

TEST_CASE("canonical output") {
  CHECK(format_form(parse_form("2*x1*x2", 2)) == "2*x1*x2");
  CHECK(format_form(parse_form("x2^2 + x1^2", 2)) == "x1^2+x2^2");
  CHECK(format_form(parse_form("-x1^2 - 1/2*x2^2", 2)) == "-x1^2-1/2*x2^2");
  CHECK(format_form(parse_form("z2*z1", 2)) == "z1*z2");
  CHECK(format_form(parse_form("7", 2)) == "7");
  CHECK(format_form(parse_form("x1^2-x1^2", 2)) == "0");
  CHECK(format_form(HomogeneousForm(Ring::D, 3, 4)) == "0");

  // Like terms combine during parsing.
  CHECK(parse_form("x1*x2+x2*x1", 2) == parse_form("2*x1*x2", 2));
}

TEST_CASE("rational literals") {
  CHECK(rat_from_string("-4/6") == Rat(-2, 3));
  CHECK(rat_to_string(Rat(-2, 3)) == "-2/3");
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("a"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
}
