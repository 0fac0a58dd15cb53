#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "submax/matroid.hpp"
#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax::testing {

// Triangle graph, all edge weights 1: every vertex has cut degree 2.
inline CutFunction triangle_cut() {
  return CutFunction(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

// Small deterministic generator for property tests (splitmix64).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// Finite-rank guarantee of the derandomized matroid greedy.
inline double derand_bound(std::size_t k) {
  const double kd = static_cast<double>(k);
  return 0.25 *
         (1.0 + (2.0 * (kd + 1.0) / kd - 1.0) * std::pow(1.0 - 2.0 / kd, kd - 1.0));
}

// Exhaustive max-weight base, the oracle for the matroid greedy.
template <typename Weight>
inline Subset brute_force_max_weight_base(const MatroidOracle& m,
                                          const std::vector<Weight>& w,
                                          const Subset& allowed) {
  const std::size_t n = m.ground_size();
  const std::size_t k = rank_of(m);
  Subset best(n);
  Weight best_w{};
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s = Subset::from_mask(n, mask);
    if (s.size() != k || !s.set_minus(allowed).empty() || !m.is_independent(s))
      continue;
    Weight total{};
    for (std::size_t u : s.elements()) total += w[u];
    if (!found || best_w < total) {
      best = s;
      best_w = total;
      found = true;
    }
  }
  return best;
}

} // namespace submax::testing
