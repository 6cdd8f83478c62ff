#include "lct/errors.hpp"
#include "lct/newton_hull.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lct;
using lct::testing::brute_diagonal;
using lct::testing::brute_planar_facets;
using lct::testing::random_support;

namespace {

using Support = std::vector<ExponentVector>;

const Support kPentagon{{0, 7}, {2, 3}, {5, 3}, {4, 1}, {6, 0}};

std::vector<Rat> pt(std::initializer_list<Rat> xs) { return xs; }

Facet facet(std::initializer_list<long> normal, long offset) {
  Facet f;
  for (long a : normal) f.normal.emplace_back(a);
  f.offset = offset;
  return f;
}

std::vector<Facet> compact_only(const std::vector<Facet>& fs) {
  std::vector<Facet> out;
  for (const auto& f : fs)
    if (f.compact()) out.push_back(f);
  return out;
}

Rat max_crossing(const std::vector<Facet>& fs) {
  Rat best = 0;
  for (const auto& f : fs) best = std::max(best, diagonal_crossing(f));
  return best;
}

}  // namespace

TEST_CASE("contains_point") {
  const Support s{{2, 0}, {0, 3}};
  CHECK(contains_point(s, pt({Rat(1), Rat(3, 2)})));
  CHECK_FALSE(contains_point(s, pt({Rat(0), Rat(0)})));
  CHECK_FALSE(contains_point(s, pt({Rat(1), Rat(1)})));
  CHECK(contains_point(s, pt({Rat(5), Rat(0)})));

  const Support origin{{0, 0}};
  CHECK(contains_point(origin, pt({Rat(0), Rat(0)})));
  CHECK(contains_point(origin, pt({Rat(7, 3), Rat(1, 9)})));
  CHECK_FALSE(contains_point(origin, pt({Rat(-1, 9), Rat(0)})));

  CHECK_THROWS_AS(contains_point(s, pt({Rat(1)})), std::invalid_argument);
  CHECK_THROWS_AS(contains_point(Support{}, pt({Rat(1)})), std::invalid_argument);
}

TEST_CASE("diagonal_parameter") {
  CHECK(diagonal_parameter(Support{{2, 0}, {0, 3}}) == Rat(6, 5));
  CHECK(diagonal_parameter(kPentagon) == Rat(5, 2));
  CHECK(diagonal_parameter(Support{{3, 2}}) == 3);
  CHECK(diagonal_parameter(Support{{0, 0}, {4, 4}}) == 0);
  CHECK_THROWS_AS(diagonal_parameter(Support{}), std::invalid_argument);
}

TEST_CASE("facets") {
  CHECK(compact_only(facets(Support{{2, 0}, {0, 3}})) == std::vector<Facet>{facet({3, 2}, 6)});
  CHECK(compact_only(facets(Support{{1, 0}, {0, 1}})) == std::vector<Facet>{facet({1, 1}, 1)});
  CHECK(compact_only(facets(kPentagon)) ==
        std::vector<Facet>{facet({1, 1}, 5), facet({1, 2}, 6), facet({2, 1}, 7)});

  SUBCASE("non-compact facets are kept and flagged") {
    const auto fs = facets(Support{{3, 2}});
    CHECK(fs == std::vector<Facet>{facet({0, 1}, 2), facet({1, 0}, 3)});
    CHECK_FALSE(fs[0].compact());
    CHECK(max_crossing(fs) == 3);
  }

  SUBCASE("dimension cap") {
    const Support nine{ExponentVector(std::vector<std::uint32_t>(9, 1))};
    CHECK_THROWS_AS(facets(nine), ResourceLimitError);
    CHECK(facets(nine, HullOptions{9}).size() == 9);
  }

  SUBCASE("origin in the support leaves no facet with positive offset") {
    CHECK(facets(Support{{0, 0}, {1, 2}}).empty());
  }
}

TEST_CASE("face_bound") {
  CHECK(face_bound(facet({1, 1}, 5)) == Rat(2, 5));
  CHECK(face_bound(facet({3, 2}, 6)) == Rat(5, 6));
  CHECK(face_bound(facet({1, 1, 1, 1}, 7)) == Rat(4, 7));
  CHECK_THROWS_AS(face_bound(facet({1, 0}, 0)), std::domain_error);
}

TEST_CASE("NewtonPolyhedron membership agrees with the LP") {
  const auto p = newton_polyhedron(kPentagon);
  CHECK(p.generators.size() == 4);  // (5,3) dominates (2,3)
  for (int x = 0; x <= 16; ++x)
    for (int y = 0; y <= 16; ++y) {
      const auto q = pt({Rat(x, 2), Rat(y, 2)});
      REQUIRE(p.contains(q) == contains_point(kPentagon, q));
    }
}

TEST_CASE("oracle: planar facets match brute-force normal search") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const auto s = random_support(rng, 2, 7, 6);
    std::set<lct::testing::PlanarFacet> got;
    for (const auto& f : facets(s))
      got.insert({f.normal[0].get_ui(), f.normal[1].get_ui(), f.offset.get_ui()});
    REQUIRE(got == brute_planar_facets(s, 7));
  }
}

TEST_CASE("property: LP diagonal equals the largest facet crossing and the brute-force value") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + lct::testing::below(rng, 2);
    const auto s = random_support(rng, n, 4, 5);
    const Rat t = diagonal_parameter(s);
    REQUIRE(t == max_crossing(facets(s)));
    // 3-variable facet normals are 2x2 minors of differences: entries <= 2 * 4 * 4
    REQUIRE(t == brute_diagonal(s, n == 2 ? 4 : 32));
  }
}

TEST_CASE("property: diagonal membership switches exactly at t*") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + lct::testing::below(rng, 3);
    const auto s = random_support(rng, n, 6, 5);
    const Rat t = diagonal_parameter(s);
    for (const Rat& d : {Rat(-1, 2), Rat(-1, 1000), Rat(0), Rat(1, 1000), Rat(3)}) {
      const Rat u = t + d;
      if (u < 0) continue;
      const std::vector<Rat> diag(n, u);
      REQUIRE(contains_point(s, diag) == (u >= t));
    }
  }
}

TEST_CASE("property: monotone under enlargement, linear under scaling") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + lct::testing::below(rng, 4);
    auto s = random_support(rng, n, 6, 4);
    const Rat t = diagonal_parameter(s);

    auto bigger = s;
    const auto extra = random_support(rng, n, 6, 3);
    bigger.insert(bigger.end(), extra.begin(), extra.end());
    REQUIRE(diagonal_parameter(bigger) <= t);

    const std::uint32_t k = 1 + static_cast<std::uint32_t>(lct::testing::below(rng, 4));
    std::vector<ExponentVector> scaled;
    for (const auto& v : s) {
      std::vector<std::uint32_t> e(v.entries().begin(), v.entries().end());
      for (auto& x : e) x *= k;
      scaled.emplace_back(std::move(e));
    }
    REQUIRE(diagonal_parameter(scaled) == t * k);
  }
}

TEST_CASE("property: 1/t* adds over disjoint variables") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + lct::testing::below(rng, 2), m = 1 + lct::testing::below(rng, 2);
    const auto s = random_support(rng, n, 6, 4);
    const auto r = random_support(rng, m, 6, 4);
    std::vector<ExponentVector> sum;
    for (const auto& v : s) {
      std::vector<std::uint32_t> e(v.entries().begin(), v.entries().end());
      e.resize(n + m, 0);
      sum.emplace_back(std::move(e));
    }
    for (const auto& v : r) {
      std::vector<std::uint32_t> e(n, 0);
      e.insert(e.end(), v.entries().begin(), v.entries().end());
      sum.emplace_back(std::move(e));
    }
    REQUIRE(1 / diagonal_parameter(sum) == 1 / diagonal_parameter(s) + 1 / diagonal_parameter(r));
  }
}

TEST_CASE("facets in higher dimension satisfy their defining conditions") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 3 + lct::testing::below(rng, 3);
    const auto s = random_support(rng, n, 5, 7);
    const auto p = newton_polyhedron(s);
    for (const auto& f : p.facets) {
      BigInt g = 0;
      for (const auto& a : f.normal) {
        REQUIRE(a >= 0);
        g = gcd(g, a);
      }
      REQUIRE(g == 1);
      REQUIRE(f.offset > 0);
      std::size_t tight = 0;
      for (const auto& v : p.generators) {
        BigInt dot = 0;
        for (std::size_t k = 0; k < n; ++k) dot += f.normal[k] * v[k];
        REQUIRE(dot >= f.offset);
        if (dot == f.offset) ++tight;
      }
      REQUIRE(tight >= 1);
    }
    REQUIRE(diagonal_parameter(s) == max_crossing(p.facets));
  }
}
