#include "submax/knapsack.hpp"

#include <cmath>
#include <queue>

#include "submax/errors.hpp"

namespace submax {

void KnapsackConstraint::validate() const {
  if (budget <= 0) throw InvalidArgumentError("knapsack budget must be positive");
  for (double c : costs)
    if (c <= 0) throw InvalidArgumentError("knapsack costs must be positive");
}

double KnapsackConstraint::cost(const Subset& s) const {
  double total = 0;
  for (std::size_t u : s.elements()) total += costs[u];
  return total;
}

namespace {

// Densities this close count as tied; absorbs the one-ulp asymmetry between
// f(S1+u)-f(S1) and f(S2+u)-f(S2) when the two solutions differ in size.
constexpr double kTieTol = 1e-12;

bool tied(double a, double b) {
  return std::abs(a - b) <= kTieTol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Tie resolution among equal-density candidates; k is 1 or 2.
bool prefer(TieBreak tb, int preferred_k, int k_a, std::size_t u_a, int k_b,
            std::size_t u_b) {
  switch (tb) {
    case TieBreak::LowestId:
      return u_a != u_b ? u_a < u_b : k_a < k_b;
    case TieBreak::HighestId:
      return u_a != u_b ? u_a > u_b : k_a > k_b;
    case TieBreak::AlternateSolutions:
      if (k_a != k_b) return k_a == preferred_k;
      return u_a < u_b;
  }
  return false;
}

} // namespace

TwinGreedyResult twin_greedy(const SetFunctionOracle& f,
                             const KnapsackConstraint& knapsack,
                             TieBreak tie_break) {
  return twin_greedy(f, Subset::full(f.ground_size()), knapsack, tie_break);
}

TwinGreedyResult twin_greedy(const SetFunctionOracle& f, const Subset& ground,
                             const KnapsackConstraint& knapsack,
                             TieBreak tie_break) {
  const std::size_t n = f.ground_size();
  if (knapsack.costs.size() != n)
    throw InvalidArgumentError("knapsack cost vector size mismatch");
  knapsack.validate();

  TwinGreedyResult res;
  res.s1 = res.s2 = res.best = Subset(n);
  double value[3];
  value[1] = value[2] = f.eval(Subset(n));
  Subset* sol[3] = {nullptr, &res.s1, &res.s2};
  bool active[3] = {false, true, true};
  std::size_t* last_added[3] = {nullptr, &res.last_added1, &res.last_added2};

  Subset remaining = ground;
  int last_k = 2;
  std::size_t round = 0;
  while (!remaining.empty() && (active[1] || active[2])) {
    ++round;
    const int preferred_k = 3 - last_k;
    int best_k = 0;
    std::size_t best_u = 0;
    double best_density = 0, best_marg = 0, best_eval = 0;
    for (int k = 1; k <= 2; ++k) {
      if (!active[k]) continue;
      for (std::size_t u : remaining.elements()) {
        const double eval = f.eval(sol[k]->with(u));
        const double marg = eval - value[k];
        const double density = marg / knapsack.costs[u];
        if (best_k == 0 ||
            (!tied(density, best_density) && density > best_density) ||
            (tied(density, best_density) &&
             prefer(tie_break, preferred_k, k, u, best_k, best_u))) {
          best_k = k;
          best_u = u;
          best_density = density;
          best_marg = marg;
          best_eval = eval;
        }
      }
    }
    if (best_marg <= 0) break;
    sol[best_k]->add(best_u);
    value[best_k] = best_eval; // fresh eval, not accumulation, to avoid drift
    *last_added[best_k] = best_u;
    res.trace.push_back({round, best_k, best_u, best_marg});
    if (knapsack.cost(*sol[best_k]) >= knapsack.budget) active[best_k] = false;
    remaining.remove(best_u);
    last_k = best_k;
  }

  res.s1_value = value[1];
  res.s2_value = value[2];
  if (value[1] >= value[2]) {
    res.best = res.s1;
    res.best_value = value[1];
    res.best_index = 1;
  } else {
    res.best = res.s2;
    res.best_value = value[2];
    res.best_index = 2;
  }
  return res;
}

ThresholdTwinGreedyResult threshold_twin_greedy(const SetFunctionOracle& f,
                                                const KnapsackConstraint& knapsack,
                                                double epsilon, TieBreak tie_break) {
  return threshold_twin_greedy(f, Subset::full(f.ground_size()), knapsack,
                               epsilon, tie_break);
}

ThresholdTwinGreedyResult threshold_twin_greedy(const SetFunctionOracle& f,
                                                const Subset& ground,
                                                const KnapsackConstraint& knapsack,
                                                double epsilon, TieBreak tie_break) {
  const std::size_t n = f.ground_size();
  if (knapsack.costs.size() != n)
    throw InvalidArgumentError("knapsack cost vector size mismatch");
  knapsack.validate();
  if (epsilon <= 0 || epsilon >= 1)
    throw InvalidArgumentError("epsilon must lie in (0, 1)");

  ThresholdTwinGreedyResult res;
  res.s1 = res.s2 = res.best = Subset(n);
  res.discarded = Subset(n);
  res.reinsertions.assign(n, 0);

  const std::size_t m = ground.size();
  const double cap = m == 0 ? 0 : 2.0 * std::log(static_cast<double>(m) / epsilon) / epsilon;

  std::vector<double> delta(n, 0);
  struct Entry {
    double key;
    std::size_t u;
    bool operator<(const Entry& o) const {
      // max-heap on key; ties go to the lowest id
      return key != o.key ? key < o.key : u > o.u;
    }
  };
  std::priority_queue<Entry> queue;
  for (std::size_t u : ground.elements()) {
    delta[u] = f.eval(Subset(n).with(u));
    queue.push({delta[u] / knapsack.costs[u], u});
  }

  double value[3];
  value[1] = value[2] = f.eval(Subset(n));
  Subset* sol[3] = {nullptr, &res.s1, &res.s2};
  bool active[3] = {false, true, true};
  std::size_t* last_added[3] = {nullptr, &res.last_added1, &res.last_added2};

  Subset remaining = ground;
  int last_k = 2;
  std::size_t round = 0;
  while (!remaining.empty() && (active[1] || active[2]) && !queue.empty()) {
    ++round;
    const Entry top = queue.top();
    queue.pop();
    const std::size_t u = top.u;

    int k = 0;
    double marg = 0, chosen_eval = 0;
    for (int k2 = 1; k2 <= 2; ++k2) {
      if (!active[k2]) continue;
      const double e2 = f.eval(sol[k2]->with(u));
      const double m2 = e2 - value[k2];
      bool take = k == 0 || (!tied(m2, marg) && m2 > marg);
      if (!take && k != 0 && tied(m2, marg)) {
        switch (tie_break) {
          case TieBreak::LowestId: take = false; break; // keep k = 1
          case TieBreak::HighestId: take = true; break;
          case TieBreak::AlternateSolutions: take = k2 == 3 - last_k; break;
        }
      }
      if (take) {
        k = k2;
        marg = m2;
        chosen_eval = e2;
      }
    }
    if (marg <= 0) break;
    if (marg >= (1 - epsilon) * delta[u]) {
      sol[k]->add(u);
      value[k] = chosen_eval;
      *last_added[k] = u;
      res.trace.push_back({round, k, u, marg});
      remaining.remove(u);
      if (knapsack.cost(*sol[k]) >= knapsack.budget) active[k] = false;
      last_k = k;
    } else if (static_cast<double>(res.reinsertions[u]) <= cap) {
      delta[u] = marg;
      queue.push({delta[u] / knapsack.costs[u], u});
      ++res.reinsertions[u];
    } else {
      res.discarded.add(u);
      res.discards.emplace_back(u, marg);
    }
  }

  res.s1_value = value[1];
  res.s2_value = value[2];
  if (value[1] >= value[2]) {
    res.best = res.s1;
    res.best_value = value[1];
    res.best_index = 1;
  } else {
    res.best = res.s2;
    res.best_value = value[2];
    res.best_index = 2;
  }
  return res;
}

EnumerationResult enumeration_wrapper(const SetFunctionOracle& f,
                                      const KnapsackConstraint& knapsack,
                                      TwinVariant variant, double epsilon,
                                      TieBreak tie_break) {
  const std::size_t n = f.ground_size();
  if (knapsack.costs.size() != n)
    throw InvalidArgumentError("knapsack cost vector size mismatch");
  knapsack.validate();

  std::vector<Subset> guesses;
  guesses.push_back(Subset(n));
  for (std::size_t u = 0; u < n; ++u)
    if (knapsack.costs[u] <= knapsack.budget) guesses.push_back(Subset(n).with(u));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (knapsack.costs[u] + knapsack.costs[v] <= knapsack.budget)
        guesses.push_back(Subset(n).with(u).with(v));

  bool have_best = false;
  EnumerationResult best{Subset(n), 0};
  for (const Subset& e : guesses) {
    MarginalFunction fe(f, e);
    const double fe_base = f.eval(e);
    Subset inner_ground(n);
    for (std::size_t u = 0; u < n; ++u) {
      if (e.contains(u)) continue;
      const double mu = fe.eval(Subset(n).with(u));
      if (mu > 0.5 * fe_base) continue; // the D filter
      inner_ground.add(u);
    }
    const double residual_budget = knapsack.budget - knapsack.cost(e);

    Subset r(n);
    if (residual_budget > 0 && !inner_ground.empty()) {
      KnapsackConstraint inner{knapsack.costs, residual_budget};
      Subset g(n);
      std::size_t last = TwinGreedyResult::npos;
      if (variant == TwinVariant::Plain) {
        TwinGreedyResult tg = twin_greedy(fe, inner_ground, inner, tie_break);
        g = tg.best;
        last = tg.best_index == 1 ? tg.last_added1 : tg.last_added2;
      } else {
        ThresholdTwinGreedyResult tg =
            threshold_twin_greedy(fe, inner_ground, inner, epsilon, tie_break);
        g = tg.best;
        last = tg.best_index == 1 ? tg.last_added1 : tg.last_added2;
      }
      r = g;
      if (knapsack.cost(r) > residual_budget && last != TwinGreedyResult::npos)
        r.remove(last);
    }

    const Subset candidate = e.set_union(r);
    const double value = f.eval(candidate);
    if (!have_best || value > best.value) {
      best = {candidate, value};
      have_best = true;
    }
  }
  return best;
}

} // namespace submax
