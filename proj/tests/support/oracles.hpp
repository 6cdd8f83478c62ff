#pragma once

// Independent reference computations. None of these call into the LP or the
// facet enumerator; they work by exhaustive enumeration.

#include "lct/poly.hpp"
#include "lct/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <vector>

namespace lct::testing {

inline Rat min_pairing_over(std::span<const ExponentVector> support, const std::vector<std::uint64_t>& a) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : support) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
    best = std::min(best, s);
  }
  return Rat(best);
}

/// max over nonzero a in [0, bound]^n of min_v(a.v) / sum(a). Every candidate
/// gives a lower bound on t*, and the maximum is attained at a facet normal,
/// so this equals t* once `bound` covers the facet normals' entries.
inline Rat brute_diagonal(std::span<const ExponentVector> support, std::uint64_t bound) {
  const std::size_t n = support.front().dimension();
  std::vector<std::uint64_t> a(n, 0);
  Rat best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      const std::uint64_t w = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
      if (w == 0) return;
      Rat q = min_pairing_over(support, a) / Rat(w);
      if (q > best) best = q;
      return;
    }
    for (std::uint64_t x = 0; x <= bound; ++x) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

struct PlanarFacet {
  std::uint64_t a1, a2, d;
  auto operator<=>(const PlanarFacet&) const = default;
};

/// Facets with d > 0 of a planar Newton polyhedron, by testing every primitive
/// normal with entries <= bound: a positive normal is a facet when at least two
/// distinct generators are tight; an axis normal always supports an unbounded edge.
inline std::set<PlanarFacet> brute_planar_facets(std::span<const ExponentVector> support, std::uint64_t bound) {
  std::set<PlanarFacet> out;
  for (std::uint64_t a1 = 0; a1 <= bound; ++a1)
    for (std::uint64_t a2 = 0; a2 <= bound; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      std::uint64_t d = UINT64_MAX;
      for (const auto& v : support) d = std::min(d, a1 * v[0] + a2 * v[1]);
      if (d == 0) continue;
      std::set<ExponentVector> tight;
      for (const auto& v : support)
        if (a1 * v[0] + a2 * v[1] == d) tight.insert(v);
      if (a1 == 0 || a2 == 0 || tight.size() >= 2) out.insert({a1, a2, d});
    }
  return out;
}

/// Direct triple loop over the two-variable threshold formula.
inline std::set<Rat> brute_ht2(std::uint64_t B) {
  std::set<Rat> out{Rat(0)};
  for (std::uint64_t c1 = 0; c1 <= B; ++c1)
    for (std::uint64_t c2 = 0; c2 <= B; ++c2)
      for (std::uint64_t a1 = 0; a1 <= B; ++a1)
        for (std::uint64_t a2 = 0; a2 <= B; ++a2) {
          if (a1 + c1 < std::max<std::uint64_t>(2, a2) || a2 + c2 < std::max<std::uint64_t>(2, a1)) continue;
          const std::uint64_t den = c1 * c2 + a1 * c2 + a2 * c1;
          if (den == 0) continue;
          Rat q(c1 + c2, den);
          q.canonicalize();
          out.insert(q);
        }
  return out;
}

/// max of sum 1/a_i < 1 over a_1 <= ... <= a_n <= bound.
inline Rat brute_gap(int n, std::uint64_t bound) {
  Rat best = 0;
  std::function<void(int, std::uint64_t, Rat)> rec = [&](int depth, std::uint64_t lo, Rat s) {
    if (depth == n) {
      if (s < 1 && s > best) best = s;
      return;
    }
    for (std::uint64_t a = lo; a <= bound; ++a) {
      Rat next = s + Rat(1, a);
      if (next >= 1) continue;
      rec(depth + 1, a, next);
    }
  };
  rec(0, 2, Rat(0));
  return best;
}

}  // namespace lct::testing
