#include "submax/packing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "submax/errors.hpp"

namespace submax {

void PackingConstraint::validate(std::size_t n) const {
  if (a.size() != b.size())
    throw InvalidArgumentError("packing matrix and bound vector disagree on row count");
  for (const auto& row : a) {
    if (row.size() != n)
      throw InvalidArgumentError("packing matrix row size mismatch");
    for (double e : row)
      if (!(e >= 0 && e <= 1))
        throw InvalidArgumentError("packing matrix entries must lie in [0, 1]");
  }
  for (double bi : b)
    if (!(bi >= 1)) throw InvalidArgumentError("packing bounds must be >= 1");
}

std::vector<double> PackingConstraint::load(const Subset& s) const {
  std::vector<double> lhs(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t u : s.elements()) lhs[i] += a[i][u];
  return lhs;
}

bool PackingConstraint::feasible(const Subset& s) const {
  const std::vector<double> lhs = load(s);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (lhs[i] > b[i]) return false;
  return true;
}

double PackingConstraint::width() const {
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (double e : a[i])
      if (e > 0) w = std::min(w, b[i] / e);
  return w;
}

MultiplicativeUpdatesResult multiplicative_updates(const SetFunctionOracle& f,
                                                   const Subset& ground,
                                                   const PackingConstraint& packing,
                                                   double lambda) {
  const std::size_t n = f.ground_size();
  packing.validate(n);
  if (!(lambda > 1)) throw InvalidArgumentError("lambda must exceed 1");
  const std::size_t m = packing.rows();

  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = 1.0 / packing.b[i];

  MultiplicativeUpdatesResult res{Subset(n), 0, false, {}};
  double value = f.eval(Subset(n));
  double prev_value = value;
  Subset remaining = ground;

  while (!remaining.empty()) {
    double budget_sum = 0;
    for (std::size_t i = 0; i < m; ++i) budget_sum += packing.b[i] * w[i];
    if (budget_sum > lambda) break;

    // Rank by marginal per weighted capacity. A zero-weight column with a
    // positive marginal costs nothing and outranks everything.
    bool found = false, best_free = false;
    std::size_t best_j = 0;
    double best_ratio = 0, best_marg = 0;
    for (std::size_t j : remaining.elements()) {
      const double marg = f.eval(res.solution.with(j)) - value;
      double denom = 0;
      for (std::size_t i = 0; i < m; ++i) denom += packing.a[i][j] * w[i];
      const bool free = denom == 0 && marg > 0;
      const double ratio =
          denom > 0 ? marg / denom : -std::numeric_limits<double>::infinity();
      const bool better =
          !found || (free && !best_free) ||
          (free == best_free && !free && ratio > best_ratio);
      if (better) {
        found = true;
        best_free = free;
        best_j = j;
        best_ratio = ratio;
        best_marg = marg;
      }
    }
    if (!found || best_marg <= 0) break;

    prev_value = value;
    res.solution.add(best_j);
    value += best_marg;
    res.order.push_back(best_j);
    remaining.remove(best_j);
    for (std::size_t i = 0; i < m; ++i)
      w[i] *= std::pow(lambda, packing.a[i][best_j] / packing.b[i]);
  }

  if (!packing.feasible(res.solution) && !res.order.empty()) {
    res.solution.remove(res.order.back());
    res.trimmed = true;
    value = prev_value;
  }
  res.value = value;
  return res;
}

UsmResult usm_double_greedy(const SetFunctionOracle& f, const Subset& v) {
  const std::size_t n = f.ground_size();
  Subset x(n), y = v;
  double vx = f.eval(x);
  double vy = f.eval(y);
  for (std::size_t u : v.elements()) {
    const double a = f.eval(x.with(u)) - vx;
    const double b = f.eval(y.without(u)) - vy;
    if (a >= b) {
      x.add(u);
      vx += a;
    } else {
      y.remove(u);
      vy += b;
    }
  }
  return {x, vx};
}

UsmResult usm_exhaustive(const SetFunctionOracle& f, const Subset& v) {
  const std::vector<std::size_t> ids = v.elements();
  if (ids.size() > 20)
    throw ResourceLimitError("exhaustive unconstrained scan limited to 20 elements");
  const std::size_t n = f.ground_size();
  UsmResult best{Subset(n), f.eval(Subset(n))};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ids.size()); ++mask) {
    Subset s(n);
    for (std::size_t t = 0; t < ids.size(); ++t)
      if (mask >> t & 1) s.add(ids[t]);
    const double val = f.eval(s);
    if (val > best.value) best = {s, val};
  }
  return best;
}

PackingMainResult packing_main(const SetFunctionOracle& f, const Subset& ground,
                               const PackingConstraint& packing, double epsilon,
                               UsmMethod usm) {
  const std::size_t n = f.ground_size();
  packing.validate(n);
  if (!(epsilon > 0)) throw InvalidArgumentError("epsilon must be positive");

  PackingMainResult res;
  res.width = packing.width();
  const double m = static_cast<double>(std::max<std::size_t>(packing.rows(), 1));
  res.width_precondition =
      res.width >= std::max(9.0 * std::log(m) / (epsilon * epsilon), 3.0 / epsilon);

  const double lambda = std::exp(epsilon * res.width / 3.0);
  MultiplicativeUpdatesResult r1 = multiplicative_updates(f, ground, packing, lambda);
  MultiplicativeUpdatesResult r2 =
      multiplicative_updates(f, ground.set_minus(r1.solution), packing, lambda);
  UsmResult r3 = usm == UsmMethod::Exhaustive ? usm_exhaustive(f, r1.solution)
                                              : usm_double_greedy(f, r1.solution);

  res.s1 = r1.solution;
  res.s2 = r2.solution;
  res.s1_prime = r3.solution;
  res.s1_value = r1.value;
  res.s2_value = r2.value;
  res.s1_prime_value = r3.value;
  res.solution = res.s1;
  res.value = res.s1_value;
  if (res.s2_value > res.value) {
    res.solution = res.s2;
    res.value = res.s2_value;
  }
  if (res.s1_prime_value > res.value) {
    res.solution = res.s1_prime;
    res.value = res.s1_prime_value;
  }
  return res;
}

} // namespace submax
