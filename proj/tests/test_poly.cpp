#include "lct/poly.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lct;
using lct::testing::random_poly;

namespace {

// y^7 + y^3 x^2 + y^3 x^5 + y x^4 + x^6, exponents ordered (x, y)
Poly figure_poly() {
  const std::vector<ExponentVector> s{{0, 7}, {2, 3}, {5, 3}, {4, 1}, {6, 0}};
  return Poly::from_support(2, s);
}

}  // namespace

TEST_CASE("support lists exactly the nonzero terms") {
  const Poly f(2, {{{2, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 0}});
  CHECK(support(f) == std::vector<ExponentVector>{{0, 3}, {2, 0}});
  CHECK(support(Poly(3)).empty());

  auto s = support(figure_poly());
  std::vector<ExponentVector> expected{{0, 7}, {2, 3}, {5, 3}, {4, 1}, {6, 0}};
  std::sort(expected.begin(), expected.end());
  CHECK(s == expected);
}

TEST_CASE("order is the minimum total degree") {
  CHECK(order(Poly::from_support(2, std::vector<ExponentVector>{{2, 1}, {0, 4}})) == 3u);
  CHECK(order(Poly::from_support(1, std::vector<ExponentVector>{{0}, {1}})) == 0u);
  CHECK(order(figure_poly()) == 5u);
  CHECK_FALSE(order(Poly(2)).has_value());
}

TEST_CASE("truncate keeps terms of degree at most m") {
  const auto t = truncate(figure_poly(), 5);
  CHECK(t == Poly::from_support(2, std::vector<ExponentVector>{{2, 3}, {4, 1}}));
  CHECK(truncate(figure_poly(), 8) == figure_poly());
  CHECK(truncate(Poly::from_support(2, std::vector<ExponentVector>{{2, 0}, {0, 3}}), 2) ==
        Poly::from_support(2, std::vector<ExponentVector>{{2, 0}}));
  CHECK_FALSE(truncate(figure_poly().with_generic_coefficients(false), 5).generic_coefficients());
}

TEST_CASE("direct_sum places summands on disjoint coordinates") {
  const Poly f = Poly::from_support(1, std::vector<ExponentVector>{{2}});
  const Poly g = Poly::from_support(1, std::vector<ExponentVector>{{3}});
  CHECK(direct_sum(f, g) == Poly::from_support(2, std::vector<ExponentVector>{{2, 0}, {0, 3}}));

  const Poly h = direct_sum(figure_poly(), Poly(1));
  CHECK(h.dimension() == 3);
  CHECK(h.terms().size() == 5);

  SUBCASE("constant terms add and may cancel") {
    const Poly a(1, {{{0}, 1}, {{1}, 1}});
    const Poly b(1, {{{0}, -1}, {{2}, 1}});
    const Poly s = direct_sum(a, b);
    CHECK_FALSE(s.has_constant_term());
    CHECK(s.terms().size() == 2);
    const Poly c(1, {{{0}, 2}});
    CHECK(direct_sum(a, c).coefficient(ExponentVector{0, 0}) == 3);
  }
}

TEST_CASE("restrict_to_axes drops terms that involve removed coordinates") {
  const Poly f = Poly::from_support(2, std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 3}});
  const std::vector<std::size_t> x{0}, both{0, 1};
  CHECK(restrict_to_axes(f, x) == Poly::from_support(1, std::vector<ExponentVector>{{2}}));
  CHECK(restrict_to_axes(Poly::from_support(2, std::vector<ExponentVector>{{2, 0}, {0, 3}}), both) ==
        Poly::from_support(2, std::vector<ExponentVector>{{2, 0}, {0, 3}}));
  CHECK(restrict_to_axes(Poly::from_support(2, std::vector<ExponentVector>{{1, 1}}), x).is_zero());

  const std::vector<std::size_t> empty, bad{2}, unordered{1, 0};
  CHECK_THROWS_AS(restrict_to_axes(f, empty), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_axes(f, bad), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_axes(f, unordered), std::invalid_argument);
}

TEST_CASE("polynomials never store zero coefficients or mismatched exponents") {
  CHECK(Poly(2, {{{1, 0}, 0}}).is_zero());
  CHECK_THROWS_AS(Poly(2, {{{1, 0, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poly(0), std::invalid_argument);
}

TEST_CASE("ThresholdValue range and ordering") {
  CHECK_THROWS_AS(ThresholdValue::finite(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(ThresholdValue::finite(Rat(3, 2)), std::domain_error);
  CHECK_THROWS_AS(ThresholdValue::zero().value(), std::logic_error);
  CHECK(ThresholdValue::zero() < ThresholdValue::finite(Rat(1, 100)));
  CHECK(ThresholdValue::finite(Rat(1)) < ThresholdValue::infinite());
  CHECK(ThresholdValue::finite(Rat(1, 3)) < ThresholdValue::finite(Rat(1, 2)));
}

TEST_CASE("property: truncation keeps a low-degree subset") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Poly f = random_poly(rng, 1 + lct::testing::below(rng, 4), 6, 8);
    const std::uint64_t m = lct::testing::below(rng, 14);
    const auto t = truncate(f, m);
    for (const auto& [e, c] : t.terms()) {
      REQUIRE(e.total_degree() <= m);
      REQUIRE(f.coefficient(e) == c);
    }
  }
}

TEST_CASE("property: order of a direct sum is the smaller order") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const Poly f = random_poly(rng, 1 + lct::testing::below(rng, 3), 5, 6);
    const Poly g = random_poly(rng, 1 + lct::testing::below(rng, 3), 5, 6);
    if (f.is_zero() || g.is_zero()) continue;
    const auto s = direct_sum(f, g);
    // a cancelling constant term is the only way the order can move
    if (f.has_constant_term() && g.has_constant_term()) continue;
    REQUIRE(order(s) == std::min(*order(f), *order(g)));
  }
}

TEST_CASE("property: restrictions compose") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Poly f = random_poly(rng, 4, 3, 10);
    std::vector<std::size_t> outer, inner_in_outer, inner;
    for (std::size_t k = 0; k < 4; ++k)
      if (rng() % 2) outer.push_back(k);
    if (outer.empty()) outer.push_back(rng() % 4);
    for (std::size_t j = 0; j < outer.size(); ++j)
      if (rng() % 2) {
        inner_in_outer.push_back(j);
        inner.push_back(outer[j]);
      }
    if (inner.empty()) {
      inner_in_outer.push_back(0);
      inner.push_back(outer[0]);
    }
    REQUIRE(restrict_to_axes(restrict_to_axes(f, outer), inner_in_outer) == restrict_to_axes(f, inner));
  }
}
