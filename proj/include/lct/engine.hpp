#pragma once

#include "lct/newton_hull.hpp"
#include "lct/poly.hpp"
#include "lct/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace lct {

enum class Exactness { Exact, UpperBound };

/// Multiplicity bracket 1/mult <= c_0(f) <= min(1, n/mult).
struct Bracket {
  Rat lower;
  Rat upper;
};

/// What decided a threshold value.
struct Witness {
  std::string rule;                ///< "zero-polynomial", "constant-term", "newton-facet", "newton-diagonal"
  std::optional<Rat> diagonal;     ///< t*, uncapped
  std::optional<Facet> facet;      ///< deciding facet, lexicographically smallest on ties
};

struct ThresholdReport {
  ThresholdValue value = ThresholdValue::zero();
  Exactness exactness = Exactness::Exact;
  Witness witness;
  std::optional<Bracket> bounds;   ///< present when f != 0 and f(0) = 0
};

struct LctOptions {
  /// Enumerate facets to name the deciding one. Skipped automatically above
  /// hull.max_dimension.
  bool facet_witness = true;
  HullOptions hull;
};

/// Newton threshold min(1, 1/t*). Exact under the generic-coefficient flag,
/// otherwise an upper bound.
ThresholdReport lct_newton(const Poly& f, const LctOptions& options = {});

/// Just the value of lct_newton, computed by LP only.
ThresholdValue newton_threshold(std::span<const ExponentVector> support);
ThresholdValue newton_threshold(const Poly& f);

/// 1/mult for a one-variable f. Throws std::invalid_argument if f.dimension() != 1.
ThresholdValue lct_univariate(const Poly& f);

/// Threshold of z1^a1 + ... + zn^an: min(1, sum 1/a_i).
/// Throws std::invalid_argument on an empty list or an exponent below 1.
ThresholdValue lct_diagonal(std::span<const std::uint64_t> exponents);

/// Threshold of f(x) + g(y) in disjoint variables: min(1, c_f + c_g).
ThresholdValue lct_direct_sum(const ThresholdValue& cf, const ThresholdValue& cg);

/// Throws std::invalid_argument for f = 0 or f(0) != 0.
Bracket multiplicity_bounds(const Poly& f);

/// Distance bound n/(m+1) between the thresholds of f and its degree-m truncation.
Rat truncation_bound(std::uint64_t n, std::uint64_t m);

struct SubadditivityCheck {
  ThresholdValue f;
  ThresholdValue g;
  ThresholdValue sum;  ///< Newton value on the union of the supports
  bool holds = true;
};

/// Newton-level c(f+g) <= min(1, c(f) + c(g)) for generic f, g. Throws
/// ValidationError if the inequality fails, std::invalid_argument on a
/// dimension mismatch or a non-generic input.
SubadditivityCheck check_subadditivity(const Poly& f, const Poly& g);

struct RestrictionCheck {
  ThresholdValue restricted;
  ThresholdValue full;
  bool holds = true;  ///< restricted <= full; a failure is recorded, not thrown
};

/// Newton-level comparison of c(f|_L) and c(f) for a coordinate subspace L.
/// Throws std::invalid_argument if the restriction is zero or f is not generic.
RestrictionCheck check_restriction(const Poly& f, std::span<const std::size_t> keep);

}  // namespace lct
