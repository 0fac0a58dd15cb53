#include "submax/matroid_solver.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "submax/errors.hpp"
#include "submax/lp.hpp"
#include "submax/set_function.hpp"

namespace submax {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-iteration cache of oracle values keyed by support-set index.
class MarginalCache {
public:
  MarginalCache(const DummyExtendedInstance& inst,
                const std::vector<std::pair<Rational, Subset>>& supp)
      : inst_(inst), supp_(supp) {
    base_.reserve(supp.size());
    for (const auto& [p, s] : supp) base_.push_back(inst.extended_oracle().eval(s));
    const std::size_t np = inst.extended_size();
    add_.assign(supp.size(), std::vector<double>(np, kUnset));
    rem_.assign(supp.size(), std::vector<double>(np, kUnset));
  }

  double set_value(std::size_t si) const { return base_[si]; }

  // f(u | S): zero for dummies and for u already inside S.
  double gain(std::size_t si, std::size_t u) {
    if (inst_.is_dummy(u) || supp_[si].second.contains(u)) return 0;
    double& slot = add_[si][u];
    if (std::isnan(slot))
      slot = inst_.extended_oracle().eval(supp_[si].second.with(u)) - base_[si];
    return slot;
  }

  // f(v | S - v) for v in S: zero for dummies.
  double loss(std::size_t si, std::size_t v) {
    if (inst_.is_dummy(v)) return 0;
    double& slot = rem_[si][v];
    if (std::isnan(slot))
      slot = base_[si] - inst_.extended_oracle().eval(supp_[si].second.without(v));
    return slot;
  }

private:
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
  const DummyExtendedInstance& inst_;
  const std::vector<std::pair<Rational, Subset>>& supp_;
  std::vector<double> base_;
  std::vector<std::vector<double>> add_, rem_;
};

} // namespace

Rational SupportDistribution::total_probability() const {
  Rational total = 0;
  for (const auto& [p, s] : pairs) total += p;
  return total;
}

std::vector<std::pair<Rational, Subset>> SupportDistribution::support() const {
  std::map<Subset, Rational> agg;
  for (const auto& [p, s] : pairs) agg[s] += p;
  std::vector<std::pair<Rational, Subset>> out;
  out.reserve(agg.size());
  for (auto& [s, p] : agg) out.emplace_back(p, s);
  return out;
}

Rational probability_absent(const SupportDistribution& dist, std::size_t u) {
  Rational total = 0;
  for (const auto& [p, s] : dist.pairs)
    if (!s.contains(u)) total += p;
  return total;
}

RandomGreedyResult random_greedy(const DummyExtendedInstance& instance,
                                 std::uint64_t seed) {
  const SetFunctionOracle& f = instance.extended_oracle();
  const MatroidOracle& matroid = instance.extended_matroid();
  const std::size_t np = instance.extended_size();
  const std::size_t k = instance.rank();

  Subset s(np);
  for (std::size_t d = 0; d < k; ++d) s.add(instance.base_size() + d);
  double value = f.eval(s);

  std::uint64_t state = seed;
  for (std::size_t i = 1; i <= k; ++i) {
    const Subset allowed = Subset::full(np).set_minus(s);
    std::vector<double> w(np, 0);
    for (std::size_t u : allowed.elements())
      if (!instance.is_dummy(u)) w[u] = f.eval(s.with(u)) - value;
    const Subset mi = max_weight_base(matroid, w, allowed);
    const std::vector<std::size_t> g = exchange_bijection(matroid, mi, s);
    const std::vector<std::size_t> choices = mi.elements();
    const std::size_t u = choices[splitmix(state) % choices.size()];
    s = s.with(u).without(g[u]);
    value = f.eval(s);
  }
  return {instance.strip(s), value};
}

DerandomizedGreedyResult derandomized_greedy(const DummyExtendedInstance& instance) {
  const SetFunctionOracle& f = instance.extended_oracle();
  const MatroidOracle& matroid = instance.extended_matroid();
  const std::size_t np = instance.extended_size();
  const std::size_t n = instance.base_size();
  const std::size_t k = instance.rank();
  const Rational inv_k = Rational(1) / Rational(static_cast<unsigned long>(k));

  DerandomizedGreedyResult res;
  {
    Subset dummy_base(np);
    for (std::size_t d = 0; d < k; ++d) dummy_base.add(n + d);
    SupportDistribution d0;
    d0.pairs.emplace_back(Rational(1), dummy_base);
    res.history.push_back(std::move(d0));
  }

  for (std::size_t i = 1; i <= k; ++i) {
    const std::vector<std::pair<Rational, Subset>> supp = res.history.back().support();
    const std::size_t s_count = supp.size();
    MarginalCache cache(instance, supp);

    std::vector<Rational> weights(np, Rational(0));
    for (std::size_t u = 0; u < np; ++u) {
      if (instance.is_dummy(u)) continue;
      for (std::size_t si = 0; si < s_count; ++si) {
        const double m = cache.gain(si, u);
        if (m != 0) weights[u] += supp[si].first * rational_from_double(m);
      }
    }
    const Subset mi = max_weight_base(matroid, weights, Subset::full(np));
    const std::vector<std::size_t> mi_elems = mi.elements();
    std::vector<std::size_t> mi_index(np, kNone);
    for (std::size_t j = 0; j < k; ++j) mi_index[mi_elems[j]] = j;

    // exchange map and its inverse per support set
    std::vector<std::vector<std::size_t>> g(s_count), ginv(s_count);
    for (std::size_t si = 0; si < s_count; ++si) {
      g[si] = exchange_bijection(matroid, mi, supp[si].second);
      ginv[si].assign(np, kNone);
      for (std::size_t u : mi_elems) ginv[si][g[si][u]] = u;
    }

    // Variables y(u, S) = Pr[S] * x(u, S); the x-space system scaled per
    // column so matrix entries stay small and probabilities sit in the rhs.
    const auto var = [&](std::size_t si, std::size_t uj) { return si * k + uj; };
    LinearSystem sys;
    sys.var_count = s_count * k;

    {
      // expected gain of the step is at least the 1/k-uniform average
      LinearConstraint row;
      row.coeffs.assign(sys.var_count, Rational(0));
      row.rel = Rel::GreaterEq;
      Rational avg = 0;
      for (std::size_t si = 0; si < s_count; ++si)
        for (std::size_t j = 0; j < k; ++j) {
          const Rational m = rational_from_double(cache.gain(si, mi_elems[j]));
          row.coeffs[var(si, j)] = m;
          avg += supp[si].first * m;
        }
      row.rhs = inv_k * avg;
      sys.rows.push_back(std::move(row));
    }
    {
      // expected loss from the displaced element is at most the average
      LinearConstraint row;
      row.coeffs.assign(sys.var_count, Rational(0));
      row.rel = Rel::LessEq;
      Rational avg = 0;
      for (std::size_t si = 0; si < s_count; ++si)
        for (std::size_t j = 0; j < k; ++j) {
          const Rational m =
              rational_from_double(cache.loss(si, g[si][mi_elems[j]]));
          row.coeffs[var(si, j)] = m;
          avg += supp[si].first * m;
        }
      row.rhs = inv_k * avg;
      sys.rows.push_back(std::move(row));
    }
    // each candidate joins with probability at most 1/k
    for (std::size_t j = 0; j < k; ++j) {
      LinearConstraint row;
      row.coeffs.assign(sys.var_count, Rational(0));
      row.rel = Rel::LessEq;
      Rational absent = 0;
      for (std::size_t si = 0; si < s_count; ++si)
        if (!supp[si].second.contains(mi_elems[j])) {
          row.coeffs[var(si, j)] = 1;
          absent += supp[si].first;
        }
      row.rhs = inv_k * absent;
      sys.rows.push_back(std::move(row));
    }
    // each present element leaves with probability at least 1/k
    for (std::size_t w = 0; w < np; ++w) {
      LinearConstraint row;
      row.coeffs.assign(sys.var_count, Rational(0));
      row.rel = Rel::GreaterEq;
      Rational present = 0;
      bool seen = false;
      for (std::size_t si = 0; si < s_count; ++si)
        if (supp[si].second.contains(w)) {
          row.coeffs[var(si, mi_index[ginv[si][w]])] = 1;
          present += supp[si].first;
          seen = true;
        }
      if (!seen) continue;
      row.rhs = inv_k * present;
      sys.rows.push_back(std::move(row));
    }
    // per support set the step probabilities add up to Pr[S]
    for (std::size_t si = 0; si < s_count; ++si) {
      LinearConstraint row;
      row.coeffs.assign(sys.var_count, Rational(0));
      row.rel = Rel::Equal;
      for (std::size_t j = 0; j < k; ++j) row.coeffs[var(si, j)] = 1;
      row.rhs = supp[si].first;
      sys.rows.push_back(std::move(row));
    }

    std::vector<Rational> start(sys.var_count);
    for (std::size_t si = 0; si < s_count; ++si)
      for (std::size_t j = 0; j < k; ++j) start[var(si, j)] = supp[si].first * inv_k;

    const bool start_ok = verify_feasible(sys, start);
    if (!start_ok)
      throw InternalInvariantError("uniform step assignment violates the step system");
    const std::vector<Rational> y = to_extreme_point(sys, start);

    SupportDistribution di;
    bool all_bases = true;
    for (std::size_t si = 0; si < s_count; ++si)
      for (std::size_t j = 0; j < k; ++j) {
        const Rational& p = y[var(si, j)];
        if (p <= 0) continue;
        const std::size_t u = mi_elems[j];
        Subset next = supp[si].second.with(u).without(g[si][u]);
        if (next.size() < k) {
          // a swap inside the current set drops one slot; refill it with
          // the first spare dummy so every carried set stays a base
          for (std::size_t d = n; d < np; ++d)
            if (!next.contains(d)) {
              next.add(d);
              break;
            }
        }
        if (next.size() != k || !matroid.is_independent(next)) all_bases = false;
        di.pairs.emplace_back(p, std::move(next));
      }

    res.stats.push_back({di.pairs.size(), s_count, sys.var_count, sys.rows.size(),
                         start_ok, all_bases});
    res.history.push_back(std::move(di));
  }

  const std::vector<std::pair<Rational, Subset>> final_supp =
      res.history.back().support();
  bool have = false;
  double best = 0;
  Subset best_set(np);
  for (const auto& [p, s] : final_supp) {
    const double v = f.eval(s);
    if (!have || v > best) {
      best = v;
      best_set = s;
      have = true;
    }
  }
  res.solution = instance.strip(best_set);
  res.value = best;
  return res;
}

} // namespace submax
