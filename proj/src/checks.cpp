#include "submax/checks.hpp"

#include <vector>

#include "submax/errors.hpp"

namespace submax {

double marginal(const SetFunctionOracle& oracle, std::size_t u, const Subset& s) {
  if (u >= oracle.ground_size()) throw InvalidArgumentError("element id out of range");
  const double base = oracle.eval(s);
  return oracle.eval(s.with(u)) - base;
}

namespace {

std::vector<double> eval_all(const SetFunctionOracle& oracle, std::size_t n) {
  if (n > kExhaustiveLimit)
    throw ResourceLimitError("exhaustive check limited to n <= 20");
  if (n > oracle.ground_size()) throw InvalidArgumentError("n exceeds ground set");
  std::vector<double> f(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < f.size(); ++mask)
    f[mask] = oracle.eval(Subset::from_mask(oracle.ground_size(), mask));
  return f;
}

} // namespace

bool check_submodular(const SetFunctionOracle& oracle, std::size_t n) {
  const std::vector<double> f = eval_all(oracle, n);
  // f(S+u) - f(S) >= f(S+u+v) - f(S+v) for all S, u != v outside S.
  // Checking this local form over all S is equivalent to the full
  // marginal-decrease condition over nested pairs.
  for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
    for (std::size_t u = 0; u < n; ++u) {
      if (mask & (std::uint64_t{1} << u)) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (mask & (std::uint64_t{1} << v)) continue;
        const std::uint64_t su = mask | (std::uint64_t{1} << u);
        const std::uint64_t sv = mask | (std::uint64_t{1} << v);
        if (f[su] - f[mask] < f[su | sv] - f[sv] - kCheckTolerance) return false;
      }
    }
  }
  return true;
}

bool check_nonnegative(const SetFunctionOracle& oracle, std::size_t n) {
  for (double v : eval_all(oracle, n))
    if (v < -kCheckTolerance) return false;
  return true;
}

} // namespace submax
