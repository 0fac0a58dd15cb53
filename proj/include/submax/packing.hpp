#pragma once

#include <cstddef>
#include <vector>

#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Row constraints A x_S <= b with A entries in [0,1] and b_i >= 1.
struct PackingConstraint {
  std::vector<std::vector<double>> a; // m rows of length n
  std::vector<double> b;

  void validate(std::size_t n) const;
  std::size_t rows() const { return a.size(); }
  bool feasible(const Subset& s) const;
  std::vector<double> load(const Subset& s) const; // A x_S per row
  /// min b_i / A_ij over positive entries; +inf when A is all zero.
  double width() const;
};

struct MultiplicativeUpdatesResult {
  Subset solution;
  double value;
  bool trimmed;                   // last-added element removed for feasibility
  std::vector<std::size_t> order; // elements in the order they were picked
};

/// Density greedy against a virtual knapsack whose element costs are the
/// weighted column sums; weights grow multiplicatively and the loop stops
/// once their budget sum passes lambda. Output is always feasible.
MultiplicativeUpdatesResult multiplicative_updates(const SetFunctionOracle& f,
                                                   const Subset& ground,
                                                   const PackingConstraint& packing,
                                                   double lambda);

struct UsmResult {
  Subset solution;
  double value;
};

/// Deterministic double greedy over V, id order. 1/3 guarantee.
UsmResult usm_double_greedy(const SetFunctionOracle& f, const Subset& v);

/// Exact scan over subsets of V, |V| <= 20. Ties pick the lowest mask.
UsmResult usm_exhaustive(const SetFunctionOracle& f, const Subset& v);

enum class UsmMethod { DoubleGreedy, Exhaustive };

struct PackingMainResult {
  Subset solution;
  double value;
  Subset s1, s2, s1_prime;
  double s1_value, s2_value, s1_prime_value;
  double width;
  bool width_precondition; // W >= max{9 ln m / eps^2, 3/eps}
};

/// Two multiplicative-updates passes (lambda = e^{eps W / 3}) plus an
/// unconstrained pass inside the first solution; returns the best of three.
PackingMainResult packing_main(const SetFunctionOracle& f, const Subset& ground,
                               const PackingConstraint& packing, double epsilon,
                               UsmMethod usm);

} // namespace submax
