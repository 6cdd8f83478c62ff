#include "lct/engine.hpp"

#include "lct/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lct {

namespace {

ThresholdValue from_diagonal(const Rat& t_star) {
  if (t_star <= 1) return ThresholdValue::finite(Rat(1));
  return ThresholdValue::finite(Rat(1) / t_star);
}

std::vector<ExponentVector> union_support(const Poly& f, const Poly& g) {
  auto s = support(f);
  auto t = support(g);
  s.insert(s.end(), t.begin(), t.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

ThresholdValue newton_threshold(std::span<const ExponentVector> support) {
  if (support.empty()) return ThresholdValue::zero();
  if (std::any_of(support.begin(), support.end(), [](const ExponentVector& e) { return e.is_zero(); }))
    return ThresholdValue::infinite();
  return from_diagonal(diagonal_parameter(support));
}

ThresholdValue newton_threshold(const Poly& f) {
  const auto s = support(f);
  return newton_threshold(s);
}

ThresholdReport lct_newton(const Poly& f, const LctOptions& options) {
  ThresholdReport report;
  if (f.is_zero()) {
    report.value = ThresholdValue::zero();
    report.witness.rule = "zero-polynomial";
    return report;
  }
  if (f.has_constant_term()) {
    report.value = ThresholdValue::infinite();
    report.witness.rule = "constant-term";
    return report;
  }

  const auto s = support(f);
  const Rat t_star = diagonal_parameter(s);
  report.value = from_diagonal(t_star);
  report.exactness = f.generic_coefficients() ? Exactness::Exact : Exactness::UpperBound;
  report.witness.diagonal = t_star;
  report.witness.rule = "newton-diagonal";
  report.bounds = multiplicity_bounds(f);

  if (options.facet_witness && f.dimension() <= options.hull.max_dimension) {
    // facets are sorted, so the first crossing facet is the lexicographically smallest
    for (const auto& facet : facets(s, options.hull)) {
      if (diagonal_crossing(facet) == t_star) {
        report.witness.facet = facet;
        report.witness.rule = "newton-facet";
        break;
      }
    }
    if (!report.witness.facet) throw std::logic_error("no facet attains the diagonal parameter");
  }
  return report;
}

ThresholdValue lct_univariate(const Poly& f) {
  if (f.dimension() != 1) throw std::invalid_argument("lct_univariate needs a one-variable polynomial");
  const auto m = order(f);
  if (!m) return ThresholdValue::zero();
  if (*m == 0) return ThresholdValue::infinite();
  return ThresholdValue::finite(Rat(1, *m));
}

ThresholdValue lct_diagonal(std::span<const std::uint64_t> exponents) {
  if (exponents.empty()) throw std::invalid_argument("lct_diagonal needs at least one exponent");
  Rat s = 0;
  for (auto a : exponents) {
    if (a < 1) throw std::invalid_argument("diagonal exponents must be at least 1");
    s += Rat(1, a);
  }
  return ThresholdValue::finite(s > 1 ? Rat(1) : s);
}

ThresholdValue lct_direct_sum(const ThresholdValue& cf, const ThresholdValue& cg) {
  if (cf.is_infinite() || cg.is_infinite()) return ThresholdValue::infinite();
  if (cf.is_zero()) return cg;
  if (cg.is_zero()) return cf;
  Rat s = cf.value() + cg.value();
  return ThresholdValue::finite(s > 1 ? Rat(1) : s);
}

Bracket multiplicity_bounds(const Poly& f) {
  const auto m = order(f);
  if (!m) throw std::invalid_argument("multiplicity bounds of the zero polynomial");
  if (*m == 0) throw std::invalid_argument("multiplicity bounds need f(0) = 0");
  Rat upper(f.dimension(), *m);
  upper.canonicalize();
  return {Rat(1, *m), upper > 1 ? Rat(1) : upper};
}

Rat truncation_bound(std::uint64_t n, std::uint64_t m) {
  if (n < 1) throw std::invalid_argument("truncation bound needs n >= 1");
  Rat q(n, m + 1);
  q.canonicalize();
  return q;
}

SubadditivityCheck check_subadditivity(const Poly& f, const Poly& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("subadditivity needs equal dimensions");
  if (!f.generic_coefficients() || !g.generic_coefficients())
    throw std::invalid_argument("subadditivity check needs generic coefficients");

  SubadditivityCheck check{newton_threshold(f), newton_threshold(g), ThresholdValue::zero()};
  check.sum = newton_threshold(union_support(f, g));
  check.holds = check.sum <= lct_direct_sum(check.f, check.g);
  if (!check.holds)
    throw ValidationError("subadditivity violated: Newton value of the union exceeds min(1, c(f) + c(g))");
  return check;
}

RestrictionCheck check_restriction(const Poly& f, std::span<const std::size_t> keep) {
  if (!f.generic_coefficients()) throw std::invalid_argument("restriction check needs generic coefficients");
  const Poly r = restrict_to_axes(f, keep);
  if (r.is_zero()) throw std::invalid_argument("restriction to the chosen axes is the zero polynomial");
  RestrictionCheck check{newton_threshold(r), newton_threshold(f)};
  check.holds = check.restricted <= check.full;
  return check;
}

}  // namespace lct
