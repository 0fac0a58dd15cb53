#include "submax/exact.hpp"

#include <cstdint>

#include "submax/errors.hpp"

namespace submax {

namespace {

std::uint64_t subset_space(const SetFunctionOracle& f) {
  const std::size_t n = f.ground_size();
  if (n > 20)
    throw ResourceLimitError("exhaustive optimum limited to 20 elements");
  return std::uint64_t{1} << n;
}

} // namespace

ExactResult brute_force_opt(const SetFunctionOracle& f,
                            const FeasiblePredicate& feasible) {
  const std::size_t n = f.ground_size();
  const std::uint64_t space = subset_space(f);
  ExactResult res{Subset(n), 0, 0};
  bool have = false;
  for (std::uint64_t mask = 0; mask < space; ++mask) {
    const Subset s = Subset::from_mask(n, mask);
    if (!feasible(s)) continue;
    ++res.enumerated;
    const double v = f.eval(s);
    if (!have || v > res.opt_value) {
      res.opt_set = s;
      res.opt_value = v;
      have = true;
    }
  }
  if (!have) throw InfeasibleError("no feasible subset exists");
  return res;
}

ExactResult brute_force_opt_reversed(const SetFunctionOracle& f,
                                     const FeasiblePredicate& feasible) {
  const std::size_t n = f.ground_size();
  const std::uint64_t space = subset_space(f);
  ExactResult res{Subset(n), 0, 0};
  bool have = false;
  std::uint64_t mask = space;
  while (mask-- > 0) {
    const Subset s = Subset::from_mask(n, mask);
    if (!feasible(s)) continue;
    ++res.enumerated;
    const double v = f.eval(s);
    if (!have || v > res.opt_value) {
      res.opt_set = s;
      res.opt_value = v;
      have = true;
    }
  }
  if (!have) throw InfeasibleError("no feasible subset exists");
  return res;
}

ExactResult brute_force_opt(const SetFunctionOracle& f, const MatroidOracle& m) {
  return brute_force_opt(f, [&](const Subset& s) { return m.is_independent(s); });
}

ExactResult brute_force_opt(const SetFunctionOracle& f, const KnapsackConstraint& k) {
  k.validate();
  // cost check runs before the oracle, so infeasible sets cost no queries
  return brute_force_opt(f, [&](const Subset& s) { return k.feasible(s); });
}

ExactResult brute_force_opt(const SetFunctionOracle& f, const PackingConstraint& p) {
  p.validate(f.ground_size());
  return brute_force_opt(f, [&](const Subset& s) { return p.feasible(s); });
}

bool ratio_verdict(double alg_value, double opt_value, double bound, double tol) {
  if (opt_value == 0) return alg_value >= -tol;
  return alg_value >= bound * opt_value - tol;
}

} // namespace submax
