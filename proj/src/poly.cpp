#include "lct/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lct {

std::uint64_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

Poly::Poly(std::size_t dimension, bool generic_coefficients)
    : dimension_(dimension), generic_(generic_coefficients) {
  if (dimension == 0) throw std::invalid_argument("polynomial dimension must be at least 1");
}

Poly::Poly(std::size_t dimension, Terms terms, bool generic_coefficients)
    : Poly(dimension, generic_coefficients) {
  for (auto& [e, c] : terms) {
    if (e.dimension() != dimension)
      throw std::invalid_argument("exponent vector of dimension " + std::to_string(e.dimension()) +
                                  " in a polynomial of dimension " + std::to_string(dimension));
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

Poly Poly::from_support(std::size_t dimension, std::span<const ExponentVector> support,
                        bool generic_coefficients) {
  Terms terms;
  for (const auto& e : support) terms[e] = 1;
  return Poly(dimension, std::move(terms), generic_coefficients);
}

bool Poly::has_constant_term() const {
  return !terms_.empty() && terms_.begin()->first.is_zero();
}

Rat Poly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::with_generic_coefficients(bool generic) const {
  Poly p = *this;
  p.generic_ = generic;
  return p;
}

std::vector<ExponentVector> support(const Poly& f) {
  std::vector<ExponentVector> out;
  out.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

std::optional<std::uint64_t> order(const Poly& f) {
  std::optional<std::uint64_t> best;
  for (const auto& [e, c] : f.terms()) {
    const auto d = e.total_degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

std::optional<std::uint64_t> degree(const Poly& f) {
  std::optional<std::uint64_t> best;
  for (const auto& [e, c] : f.terms()) {
    const auto d = e.total_degree();
    if (!best || d > *best) best = d;
  }
  return best;
}

Poly truncate(const Poly& f, std::uint64_t m) {
  Poly::Terms kept;
  for (const auto& [e, c] : f.terms())
    if (e.total_degree() <= m) kept.emplace(e, c);
  return Poly(f.dimension(), std::move(kept), f.generic_coefficients());
}

Poly direct_sum(const Poly& f, const Poly& g) {
  const std::size_t n = f.dimension(), m = g.dimension();
  Poly::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::uint32_t> v(n + m, 0);
    std::copy(e.entries().begin(), e.entries().end(), v.begin());
    terms[ExponentVector(std::move(v))] += c;
  }
  for (const auto& [e, c] : g.terms()) {
    std::vector<std::uint32_t> v(n + m, 0);
    std::copy(e.entries().begin(), e.entries().end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    terms[ExponentVector(std::move(v))] += c;
  }
  // the constructor drops a constant term that cancelled
  return Poly(n + m, std::move(terms), f.generic_coefficients() && g.generic_coefficients());
}

Poly restrict_to_axes(const Poly& f, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("restriction needs at least one coordinate");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= f.dimension())
      throw std::invalid_argument("coordinate index " + std::to_string(keep[i]) + " out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("restriction coordinates must be strictly increasing");
  }

  Poly::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t dropped = e.total_degree();
    std::vector<std::uint32_t> v;
    v.reserve(keep.size());
    for (std::size_t i : keep) {
      v.push_back(e[i]);
      dropped -= e[i];
    }
    if (dropped == 0) terms.emplace(ExponentVector(std::move(v)), c);
  }
  return Poly(keep.size(), std::move(terms), f.generic_coefficients());
}

ThresholdValue ThresholdValue::finite(Rat v) {
  if (v <= 0 || v > 1)
    throw std::domain_error("finite threshold " + v.get_str() + " outside (0, 1]");
  return ThresholdValue(Kind::Finite, std::move(v));
}

const Rat& ThresholdValue::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("threshold is not finite");
  return value_;
}

std::strong_ordering operator<=>(const ThresholdValue& a, const ThresholdValue& b) {
  if (a.kind_ != b.kind_) {
    auto rank = [](ThresholdValue::Kind k) {
      switch (k) {
        case ThresholdValue::Kind::Zero: return 0;
        case ThresholdValue::Kind::Finite: return 1;
        case ThresholdValue::Kind::Infinite: return 2;
      }
      return 0;
    };
    return rank(a.kind_) <=> rank(b.kind_);
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace lct
