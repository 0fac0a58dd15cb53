#pragma once

#include <cstddef>
#include <vector>

#include "submax/rational.hpp"

namespace submax {

enum class Rel { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rel rel = Rel::LessEq;
  Rational rhs = 0;
};

/// A system of linear constraints over x >= 0, all arithmetic exact.
struct LinearSystem {
  std::size_t var_count = 0;
  std::vector<LinearConstraint> rows;
};

/// x >= 0 and every row holds exactly.
bool verify_feasible(const LinearSystem& sys, const std::vector<Rational>& x);

/// Walk from a feasible point to an extreme point (vertex): a feasible x
/// whose active constraints (tight rows plus tight x_j >= 0 bounds) have
/// rank var_count. Deterministic: lowest-index free variable first, positive
/// direction first, move to the first newly tight constraint. At the result,
/// #{j : x_j > 0} <= number of rows.
std::vector<Rational> to_extreme_point(const LinearSystem& sys,
                                       const std::vector<Rational>& x_feasible);

/// Rank of the active-constraint matrix at x (tight rows + tight bounds).
/// Exact Gaussian elimination, independent of the walk above.
std::size_t active_rank(const LinearSystem& sys, const std::vector<Rational>& x);

} // namespace submax
