#include "lct/newton_hull.hpp"

#include "lct/errors.hpp"
#include "lct/exact_lp.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lct {

namespace {

std::size_t checked_dimension(std::span<const ExponentVector> support) {
  if (support.empty()) throw std::invalid_argument("Newton polyhedron of an empty support");
  const std::size_t n = support.front().dimension();
  if (n == 0) throw std::invalid_argument("exponent vectors must have positive dimension");
  for (const auto& v : support)
    if (v.dimension() != n) throw std::invalid_argument("exponent vectors of mixed dimension");
  return n;
}

// Rows  sum_j lambda_j v_j + s = rhs,  sum_j lambda_j = 1,  over columns
// [lambda (k) | s (n) | extra...].
lp::Problem membership_rows(std::span<const ExponentVector> gens, std::size_t n, std::size_t extra) {
  const std::size_t k = gens.size();
  lp::Problem p;
  p.a.assign(n + 1, std::vector<Rat>(k + n + extra, Rat(0)));
  p.b.assign(n + 1, Rat(0));
  p.c.assign(k + n + extra, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) p.a[i][j] = gens[j][i];
    p.a[i][k + i] = 1;
  }
  for (std::size_t j = 0; j < k; ++j) p.a[n][j] = 1;
  p.b[n] = 1;
  return p;
}

// A ray of the cone {(a, d) : a >= 0, a.v >= d for v in V} together with the
// set of constraints it makes tight.
struct Ray {
  std::vector<BigInt> y;  // a_1..a_n, d
  boost::dynamic_bitset<> zero;
};

void make_primitive(std::vector<BigInt>& y) {
  BigInt g = 0;
  for (const auto& e : y) g = gcd(g, e);
  if (g > 1)
    for (auto& e : y) e /= g;
}

}  // namespace

bool Facet::compact() const {
  return std::all_of(normal.begin(), normal.end(), [](const BigInt& a) { return a > 0; });
}

BigInt Facet::weight() const {
  BigInt s = 0;
  for (const auto& a : normal) s += a;
  return s;
}

bool Facet::satisfied_by(std::span<const Rat> p) const {
  if (p.size() != normal.size()) throw std::invalid_argument("point dimension does not match facet");
  Rat s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += normal[i] * p[i];
  return s >= offset;
}

bool Facet::tight_at(const ExponentVector& v) const {
  BigInt s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * v[i];
  return s == offset;
}

bool operator<(const Facet& a, const Facet& b) {
  if (a.normal != b.normal)
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(), b.normal.end());
  return a.offset < b.offset;
}

bool NewtonPolyhedron::contains(std::span<const Rat> p) const {
  if (p.size() != dimension) throw std::invalid_argument("point dimension does not match polyhedron");
  for (const auto& x : p)
    if (x < 0) return false;
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.satisfied_by(p); });
}

std::vector<ExponentVector> minimal_generators(std::span<const ExponentVector> support) {
  std::vector<ExponentVector> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && pts[j].divides(pts[i]);
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

bool contains_point(std::span<const ExponentVector> support, std::span<const Rat> p) {
  const std::size_t n = checked_dimension(support);
  if (p.size() != n)
    throw std::invalid_argument("point has dimension " + std::to_string(p.size()) + ", support has " +
                                std::to_string(n));
  const auto gens = minimal_generators(support);
  lp::Problem prob = membership_rows(gens, n, 0);
  for (std::size_t i = 0; i < n; ++i) prob.b[i] = p[i];
  return lp::solve(prob).status == lp::Status::Optimal;
}

Rat diagonal_parameter(std::span<const ExponentVector> support) {
  const std::size_t n = checked_dimension(support);
  const auto gens = minimal_generators(support);
  const std::size_t t_col = gens.size() + n;
  lp::Problem prob = membership_rows(gens, n, 1);
  for (std::size_t i = 0; i < n; ++i) prob.a[i][t_col] = -1;
  prob.c[t_col] = 1;
  const auto sol = lp::solve(prob);
  if (sol.status != lp::Status::Optimal) throw std::logic_error("diagonal LP did not reach an optimum");
  return sol.objective;
}

std::vector<Facet> facets(std::span<const ExponentVector> support, const HullOptions& options) {
  const std::size_t n = checked_dimension(support);
  if (n > options.max_dimension)
    throw ResourceLimitError("facet enumeration in dimension " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(options.max_dimension));

  const auto gens = minimal_generators(support);

  // Double description on the homogenized polar cone in R^{n+1}. Constraint
  // i < n is a_i >= 0; constraint n + j is a.v_j - d >= 0.
  const std::size_t total = n + gens.size();
  auto evaluate = [&](const std::vector<BigInt>& y, std::size_t row) -> BigInt {
    if (row < n) return y[row];
    const auto& v = gens[row - n];
    BigInt s = -y[n];
    for (std::size_t i = 0; i < n; ++i) s += y[i] * v[i];
    return s;
  };

  // The first n + 1 constraints form an involutory matrix, so its columns are
  // the initial rays: (e_i, v0_i) and (0, -1).
  std::vector<Ray> rays;
  for (std::size_t i = 0; i <= n; ++i) {
    Ray r;
    r.y.assign(n + 1, BigInt(0));
    if (i < n) {
      r.y[i] = 1;
      r.y[n] = gens[0][i];
    } else {
      r.y[n] = -1;
    }
    r.zero.resize(total);
    for (std::size_t row = 0; row <= n; ++row)
      if (evaluate(r.y, row) == 0) r.zero.set(row);
    rays.push_back(std::move(r));
  }

  for (std::size_t row = n + 1; row < total; ++row) {
    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = evaluate(rays[k].y, row);
      const int s = sgn(val[k]);
      if (s > 0) pos.push_back(k);
      else if (s < 0) neg.push_back(k);
      else rays[k].zero.set(row);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (sgn(val[k]) >= 0) next.push_back(rays[k]);

    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        const auto common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < n + 1) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.is_subset_of(rays[k].zero)) adjacent = false;
        if (!adjacent) continue;

        Ray r;
        r.y.resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i) r.y[i] = val[p] * rays[q].y[i] - val[q] * rays[p].y[i];
        make_primitive(r.y);
        r.zero = common;
        r.zero.set(row);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<Facet> out;
  for (auto& r : rays) {
    if (sgn(r.y[n]) <= 0) continue;  // coordinate hyperplanes and the apex ray
    Facet f;
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) g = gcd(g, r.y[i]);
    f.normal.assign(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto& a : f.normal) a /= g;
    f.offset = r.y[n] / g;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NewtonPolyhedron newton_polyhedron(std::span<const ExponentVector> support, const HullOptions& options) {
  NewtonPolyhedron p;
  p.dimension = checked_dimension(support);
  p.generators = minimal_generators(support);
  p.facets = facets(support, options);
  return p;
}

Rat face_bound(const Facet& facet) {
  if (facet.offset == 0) throw std::domain_error("face bound undefined for a facet through the origin");
  Rat q(facet.weight(), facet.offset);
  q.canonicalize();
  return q;
}

Rat diagonal_crossing(const Facet& facet) {
  Rat q(facet.offset, facet.weight());
  q.canonicalize();
  return q;
}

}  // namespace lct
