#pragma once

#include "lct/poly.hpp"
#include "lct/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lct {

/// Inequality  normal . x >= offset  defining a facet of a Newton polyhedron.
/// The normal is primitive and nonnegative; the offset is a positive integer.
struct Facet {
  std::vector<BigInt> normal;
  BigInt offset;

  /// Bounded facet: every normal entry positive. Facets with a zero entry
  /// contain a recession direction.
  bool compact() const;
  /// Sum of the normal's entries.
  BigInt weight() const;
  /// True when `p` satisfies the inequality.
  bool satisfied_by(std::span<const Rat> p) const;
  /// Does the point lie on the supporting hyperplane?
  bool tight_at(const ExponentVector& v) const;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Lexicographic on the normal, then the offset.
bool operator<(const Facet& a, const Facet& b);

struct HullOptions {
  /// Facet enumeration refuses dimensions above this.
  std::size_t max_dimension = 8;
};

/// conv(generators) + nonnegative orthant, in facet form.
struct NewtonPolyhedron {
  std::size_t dimension = 0;
  std::vector<ExponentVector> generators;  ///< minimal generators: no one divides another
  std::vector<Facet> facets;               ///< excludes the coordinate inequalities x_i >= 0

  bool contains(std::span<const Rat> p) const;
};

/// Drops duplicates and every point that dominates (componentwise >=) another;
/// the polyhedron is unchanged. Result is sorted.
std::vector<ExponentVector> minimal_generators(std::span<const ExponentVector> support);

/// Is p in conv(support) + orthant? Decided by an exact feasibility LP.
/// Throws std::invalid_argument on an empty support or a dimension mismatch.
bool contains_point(std::span<const ExponentVector> support, std::span<const Rat> p);

/// Smallest t >= 0 with (t, ..., t) in conv(support) + orthant, by exact LP.
/// Zero exactly when the origin is in the support.
Rat diagonal_parameter(std::span<const ExponentVector> support);

/// All facets with positive offset, sorted, primitive normals. Throws
/// ResourceLimitError when the dimension exceeds `options.max_dimension`.
std::vector<Facet> facets(std::span<const ExponentVector> support, const HullOptions& options = {});

NewtonPolyhedron newton_polyhedron(std::span<const ExponentVector> support, const HullOptions& options = {});

/// Upper bound sum(a)/d on the threshold from one facet, uncapped.
/// Throws std::domain_error for offset 0.
Rat face_bound(const Facet& facet);

/// offset / sum(normal): where the diagonal meets the facet's hyperplane.
Rat diagonal_crossing(const Facet& facet);

}  // namespace lct
