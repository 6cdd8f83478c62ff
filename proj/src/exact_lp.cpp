#include "lct/exact_lp.hpp"

#include <optional>
#include <stdexcept>

namespace lct::lp {

namespace {

// Tableau with rows 0..m-1 for constraints and row m for reduced costs.
// Column `rhs` holds b (and minus the objective value in the cost row).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), cols_(cols), t_((rows + 1) * (cols + 1)), basis_(rows) {}

  Rat& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  Rat& rhs(std::size_t r) { return at(r, cols_); }
  Rat& cost(std::size_t c) { return at(m_, c); }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rat inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c)
      if (sgn(at(pr, c)) != 0) at(pr, c) *= inv;
    Rat f;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr || sgn(at(r, pc)) == 0) continue;
      f = at(r, pc);
      for (std::size_t c = 0; c <= cols_; ++c)
        if (sgn(at(pr, c)) != 0) at(r, c) -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  // Runs simplex iterations over columns [0, allowed). Returns false if unbounded.
  bool optimize(std::size_t allowed, std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < allowed; ++c)
        if (sgn(cost(c)) < 0) {
          enter = c;
          break;
        }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rat best, ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(at(r, *enter)) <= 0) continue;
        ratio = at(r, cols_) / at(r, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
      ++pivots;
    }
  }

 private:
  std::size_t m_, cols_;
  std::vector<Rat> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t m = problem.a.size();
  const std::size_t n = problem.c.size();
  if (problem.b.size() != m) throw std::invalid_argument("lp: b has wrong length");
  for (const auto& row : problem.a)
    if (row.size() != n) throw std::invalid_argument("lp: row of A has wrong length");

  // columns: n structural, then m artificial
  Tableau t(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = problem.b[r] < 0;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = flip ? Rat(-problem.a[r][c]) : problem.a[r][c];
    t.rhs(r) = flip ? Rat(-problem.b[r]) : problem.b[r];
    t.at(r, n + r) = 1;
    t.basis()[r] = n + r;
  }

  // phase 1: minimize the sum of artificials
  for (std::size_t c = 0; c < n; ++c) {
    Rat s = 0;
    for (std::size_t r = 0; r < m; ++r) s -= t.at(r, c);
    t.cost(c) = s;
  }
  {
    Rat s = 0;
    for (std::size_t r = 0; r < m; ++r) s -= t.rhs(r);
    t.at(m, n + m) = s;
  }

  Solution sol;
  t.optimize(n + m, sol.pivots);
  if (sgn(t.at(m, n + m)) != 0) {
    sol.status = Status::Infeasible;
    return sol;
  }

  // drive zero-level artificials out of the basis where possible; rows where
  // that fails are redundant and stay inert
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) continue;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(t.at(r, c)) != 0) {
        t.pivot(r, c);
        ++sol.pivots;
        break;
      }
  }

  // phase 2 reduced costs
  for (std::size_t c = 0; c <= n + m; ++c) t.cost(c) = c < n ? problem.c[c] : Rat(0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bcol = t.basis()[r];
    if (bcol >= n || sgn(problem.c[bcol]) == 0) continue;
    const Rat cb = problem.c[bcol];
    for (std::size_t c = 0; c <= n + m; ++c)
      if (sgn(t.at(r, c)) != 0) t.cost(c) -= cb * t.at(r, c);
  }

  if (!t.optimize(n, sol.pivots)) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(n, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = t.rhs(r);
  sol.objective = -t.at(m, n + m);
  return sol;
}

}  // namespace lct::lp
