#include "lct/errors.hpp"
#include "lct/expr.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <random>

using namespace lct;

TEST_CASE("parse_poly basics") {
  const auto f = parse_poly("x^2 + y^3");
  CHECK(f.dimension() == 2);
  CHECK(f.coefficient(ExponentVector{2, 0}) == 1);
  CHECK(f.coefficient(ExponentVector{0, 3}) == 1);

  const auto g = parse_poly("3/2*x1^2*x3", 3);
  CHECK(g.dimension() == 3);
  CHECK(g.coefficient(ExponentVector{2, 0, 1}) == Rat(3, 2));

  const auto h = parse_poly("x*y - 2*x*y + 7");
  CHECK(h.coefficient(ExponentVector{1, 1}) == -1);
  CHECK(h.has_constant_term());

  CHECK(parse_poly("x - x").is_zero());
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly(" -w ").dimension() == 4);
  CHECK(parse_poly("z").dimension() == 3);
  CHECK(parse_poly("x^2*x^3").coefficient(ExponentVector{5}) == 1);
  CHECK_FALSE(parse_poly("x", std::nullopt, false).generic_coefficients());
}

TEST_CASE("parse_poly_expr names") {
  CHECK(parse_poly_expr("x+y").names == std::vector<std::string>{"x", "y"});
  CHECK(parse_poly_expr("z2").names == std::vector<std::string>{"z1", "z2"});
  CHECK(parse_poly_expr("x", 3).names == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x + z1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 + y2"), ParseError);
  CHECK_THROWS_AS(parse_poly("x0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x65"), ParseError);
  CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x^99999999999"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x \xc3\xa9"), ParseError);
  CHECK_THROWS_AS(parse_poly("x ++ y"), ParseError);

  try {
    parse_poly("x^2 + ?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("format_poly") {
  CHECK(format_poly(parse_poly("y^3 + x^2")) == "y^3 + x^2");
  CHECK(format_poly(parse_poly("0")) == "0");
  CHECK(format_poly(parse_poly("-x + 1/2")) == "-x + 1/2");
}

TEST_CASE("property: parse(format(f)) == f") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + lct::testing::below(rng, 6);
    const auto f = lct::testing::random_poly(rng, n, 7, 6);
    const auto text = format_poly(f);
    INFO(text);
    REQUIRE(parse_poly(text, n) == f);
  }
}
