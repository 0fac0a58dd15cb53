#pragma once

#include <cstddef>
#include <vector>

#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Per-element costs c(u) > 0 and a budget B > 0.
struct KnapsackConstraint {
  std::vector<double> costs;
  double budget = 0;

  void validate() const;
  double cost(const Subset& s) const;
  bool feasible(const Subset& s) const { return cost(s) <= budget; }
};

/// Deterministic resolution of argmax ties. `AlternateSolutions` prefers the
/// candidate solution opposite to the previous round's choice; it is the
/// adversarial schedule that realizes the tight example.
enum class TieBreak { LowestId, AlternateSolutions, HighestId };

struct TwinTraceEntry {
  std::size_t round;
  int solution; // 1 or 2
  std::size_t element;
  double marginal;
};

struct TwinGreedyResult {
  Subset s1, s2;
  Subset best;        // argmax{f(S1), f(S2)}
  double best_value = 0;
  int best_index = 1; // which candidate won, 1 or 2
  double s1_value = 0, s2_value = 0;
  std::vector<TwinTraceEntry> trace;
  // last element added into each candidate (or npos)
  std::size_t last_added1 = npos, last_added2 = npos;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct ThresholdTwinGreedyResult : TwinGreedyResult {
  Subset discarded;                      // elements whose reinsertions ran out
  std::vector<std::size_t> reinsertions; // q(u) per element
  // (element, marginal observed when it was given up on)
  std::vector<std::pair<std::size_t, double>> discards;
};

/// Grows two disjoint candidate solutions by marginal density; the returned
/// best candidate may overshoot the budget by its last added element.
TwinGreedyResult twin_greedy(const SetFunctionOracle& f,
                             const KnapsackConstraint& knapsack,
                             TieBreak tie_break = TieBreak::LowestId);

/// Restriction of twin_greedy to a sub-ground-set (used by the wrapper).
TwinGreedyResult twin_greedy(const SetFunctionOracle& f, const Subset& ground,
                             const KnapsackConstraint& knapsack,
                             TieBreak tie_break);

/// Lazy variant: a max-key priority queue on cached density bounds, accepting
/// an element when its fresh marginal is within (1 - eps) of its bound, with
/// at most ceil(2 ln(n/eps) / eps) reinsertions per element.
ThresholdTwinGreedyResult threshold_twin_greedy(const SetFunctionOracle& f,
                                                const KnapsackConstraint& knapsack,
                                                double epsilon,
                                                TieBreak tie_break = TieBreak::LowestId);

ThresholdTwinGreedyResult threshold_twin_greedy(const SetFunctionOracle& f,
                                                const Subset& ground,
                                                const KnapsackConstraint& knapsack,
                                                double epsilon, TieBreak tie_break);

enum class TwinVariant { Plain, Threshold };

struct EnumerationResult {
  Subset solution;
  double value;
};

/// Guess-two-elements wrapper: for every E with |E| <= 2 and c(E) <= B, run
/// the chosen twin variant on the filtered residual instance, trim the
/// overshooting element, and keep the best E ∪ R_E. Output always feasible.
EnumerationResult enumeration_wrapper(const SetFunctionOracle& f,
                                      const KnapsackConstraint& knapsack,
                                      TwinVariant variant, double epsilon = 0.1,
                                      TieBreak tie_break = TieBreak::LowestId);

} // namespace submax
