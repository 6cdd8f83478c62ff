#pragma once

#include "lct/rational.hpp"

#include <cstddef>
#include <vector>

namespace lct::lp {

/// minimize c.x  subject to  A x = b,  x >= 0.
struct Problem {
  std::vector<std::vector<Rat>> a;  ///< rows of A
  std::vector<Rat> b;
  std::vector<Rat> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rat objective;
  std::vector<Rat> x;  ///< primal point; meaningful when Optimal
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex in exact arithmetic. Bland's rule on both
/// the entering and leaving choice, so it terminates on degenerate problems.
Solution solve(const Problem& problem);

}  // namespace lct::lp
