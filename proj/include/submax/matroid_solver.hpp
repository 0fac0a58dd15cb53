#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "submax/matroid.hpp"
#include "submax/rational.hpp"
#include "submax/subset.hpp"

namespace submax {

/// A distribution over bases of the dummy-extended matroid, kept as a
/// multiset of (probability, base) pairs. Probabilities are exact.
struct SupportDistribution {
  std::vector<std::pair<Rational, Subset>> pairs;

  Rational total_probability() const;
  /// Distinct support sets with aggregated probabilities, sorted.
  std::vector<std::pair<Rational, Subset>> support() const;
};

/// Exact probability that u lies outside a sampled set.
Rational probability_absent(const SupportDistribution& dist, std::size_t u);

struct RandomGreedyResult {
  Subset solution; // over the original ground set
  double value;
};

/// The randomized reference: k swap rounds, each picking a uniform element
/// of a max-marginal-weight base disjoint from the current set.
RandomGreedyResult random_greedy(const DummyExtendedInstance& instance,
                                 std::uint64_t seed);

struct DerandIterationStats {
  std::size_t pair_count;      // |D_i|
  std::size_t support_size;    // |supp(D_{i-1})| feeding this iteration
  std::size_t lp_vars, lp_rows;
  bool start_point_feasible;   // the uniform 1/k point passed verification
  bool all_bases;              // every support set of D_i is a base of M'
};

struct DerandomizedGreedyResult {
  Subset solution; // over the original ground set
  double value;
  std::vector<SupportDistribution> history; // D_0 ... D_k
  std::vector<DerandIterationStats> stats;  // one entry per iteration
};

/// Deterministic counterpart: maintains the whole distribution explicitly,
/// steering it through an extreme point of a per-iteration LP so the support
/// grows linearly instead of exponentially.
DerandomizedGreedyResult derandomized_greedy(const DummyExtendedInstance& instance);

} // namespace submax
