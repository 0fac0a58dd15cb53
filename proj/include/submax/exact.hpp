#pragma once

#include <cstddef>
#include <functional>

#include "submax/knapsack.hpp"
#include "submax/matroid.hpp"
#include "submax/packing.hpp"
#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

struct ExactResult {
  Subset opt_set;
  double opt_value;
  std::size_t enumerated; // feasible subsets visited
};

using FeasiblePredicate = std::function<bool(const Subset&)>;

/// Exhaustive constrained maximum, ascending mask order, ties keep the
/// lowest bitmask. Limited to n <= 20.
ExactResult brute_force_opt(const SetFunctionOracle& f, const FeasiblePredicate& feasible);

/// Independently coded cross-check: descending masks, >= replacement, so it
/// lands on the same value but finds ties from the other end.
ExactResult brute_force_opt_reversed(const SetFunctionOracle& f,
                                     const FeasiblePredicate& feasible);

ExactResult brute_force_opt(const SetFunctionOracle& f, const MatroidOracle& m);
ExactResult brute_force_opt(const SetFunctionOracle& f, const KnapsackConstraint& k);
ExactResult brute_force_opt(const SetFunctionOracle& f, const PackingConstraint& p);

/// pass iff alg >= bound * opt - tol (opt = 0 collapses to alg >= -tol).
bool ratio_verdict(double alg_value, double opt_value, double bound, double tol);

} // namespace submax
