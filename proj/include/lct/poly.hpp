#pragma once

#include "lct/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lct {

/// Exponents of a monomial x1^e1 * ... * xn^en.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dimension) : entries_(dimension, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

  std::size_t dimension() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }

  std::uint64_t total_degree() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise <=.
  bool divides(const ExponentVector& other) const noexcept;

  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<std::uint32_t> entries_;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Stored coefficients are never zero. The generic flag records the caller's
/// assertion that the coefficients avoid the special values for which the
/// Newton polyhedron fails to determine the threshold; it is not checked.
class Poly {
 public:
  using Terms = std::map<ExponentVector, Rat>;

  explicit Poly(std::size_t dimension, bool generic_coefficients = true);
  Poly(std::size_t dimension, Terms terms, bool generic_coefficients = true);

  /// Sum of the given monomials, each with coefficient 1 (duplicates collapse).
  static Poly from_support(std::size_t dimension, std::span<const ExponentVector> support,
                           bool generic_coefficients = true);

  std::size_t dimension() const noexcept { return dimension_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool generic_coefficients() const noexcept { return generic_; }
  bool has_constant_term() const;
  Rat coefficient(const ExponentVector& e) const;

  Poly with_generic_coefficients(bool generic) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t dimension_;
  Terms terms_;
  bool generic_;
};

/// Exponent vectors carrying a nonzero coefficient, in ascending order.
std::vector<ExponentVector> support(const Poly& f);

/// Vanishing order at the origin (minimum total degree); nullopt for the zero polynomial.
std::optional<std::uint64_t> order(const Poly& f);

/// Largest total degree; nullopt for the zero polynomial.
std::optional<std::uint64_t> degree(const Poly& f);

/// Degree-m Taylor polynomial: the terms of total degree <= m.
Poly truncate(const Poly& f, std::uint64_t m);

/// f(x) + g(y) in disjoint variable sets; x comes first.
Poly direct_sum(const Poly& f, const Poly& g);

/// Sets every coordinate outside `keep` (0-based, strictly increasing) to zero
/// and re-indexes the survivors as variables 0..|keep|-1.
Poly restrict_to_axes(const Poly& f, std::span<const std::size_t> keep);

/// Log canonical threshold at the origin: zero for f = 0, infinite when f(0) != 0,
/// otherwise a rational in (0, 1].
class ThresholdValue {
 public:
  enum class Kind { Zero, Finite, Infinite };

  static ThresholdValue zero() { return ThresholdValue(Kind::Zero, Rat(0)); }
  static ThresholdValue infinite() { return ThresholdValue(Kind::Infinite, Rat(0)); }
  /// Throws std::domain_error unless 0 < v <= 1.
  static ThresholdValue finite(Rat v);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

  /// The rational value; throws std::logic_error unless finite.
  const Rat& value() const;

  friend bool operator==(const ThresholdValue& a, const ThresholdValue& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }
  /// Zero < every finite value < infinite.
  friend std::strong_ordering operator<=>(const ThresholdValue& a, const ThresholdValue& b);

 private:
  ThresholdValue(Kind kind, Rat v) : kind_(kind), value_(std::move(v)) {}

  Kind kind_;
  Rat value_;
};

}  // namespace lct
