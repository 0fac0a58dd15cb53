#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Value-oracle access to a set function f : 2^N -> R.
///
/// Every call to eval() bumps the query counter by exactly one; the counter
/// is the unit in which algorithm complexity is measured. Evaluation is pure,
/// but the counter is not synchronized: one solver run owns one oracle.
class SetFunctionOracle {
public:
  virtual ~SetFunctionOracle() = default;

  double eval(const Subset& s) const {
    ++queries_;
    return value(s);
  }

  std::size_t ground_size() const { return n_; }
  std::uint64_t query_count() const { return queries_; }
  void reset_query_count() const { queries_ = 0; }

protected:
  explicit SetFunctionOracle(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgumentError("ground set must be non-empty");
  }
  virtual double value(const Subset& s) const = 0;

private:
  std::size_t n_;
  mutable std::uint64_t queries_ = 0;
};

struct WeightedEdge {
  std::size_t u, v;
  double weight;
};

/// Cut function of a weighted graph: f(S) = total weight of edges with
/// exactly one endpoint in S. Non-negative, non-monotone, submodular.
class CutFunction : public SetFunctionOracle {
public:
  CutFunction(std::size_t n, std::vector<WeightedEdge> edges)
      : SetFunctionOracle(n), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.u >= n || e.v >= n) throw InvalidArgumentError("edge endpoint out of range");
      if (e.u == e.v) throw InvalidArgumentError("self-loop in cut function");
      if (e.weight < 0) throw InvalidArgumentError("negative edge weight");
    }
  }

  const std::vector<WeightedEdge>& edges() const { return edges_; }

protected:
  double value(const Subset& s) const override {
    double total = 0;
    for (const auto& e : edges_)
      if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
    return total;
  }

private:
  std::vector<WeightedEdge> edges_;
};

/// Explicit table of 2^n values indexed by subset bitmask (n <= 20).
/// Makes no submodularity promise on its own; used for adversarial tests.
class TableFunction : public SetFunctionOracle {
public:
  TableFunction(std::size_t n, std::vector<double> values)
      : SetFunctionOracle(n), values_(std::move(values)) {
    if (n > 20) throw ResourceLimitError("table function limited to n <= 20");
    if (values_.size() != (std::size_t{1} << n))
      throw InvalidArgumentError("table must have 2^n entries");
  }

  const std::vector<double>& values() const { return values_; }

protected:
  double value(const Subset& s) const override {
    return values_[s.low_mask()];
  }

private:
  std::vector<double> values_;
};

/// Modular function f(S) = sum of per-element weights. Submodular; used as a
/// degenerate test family.
class ModularFunction : public SetFunctionOracle {
public:
  ModularFunction(std::vector<double> weights)
      : SetFunctionOracle(weights.size()), weights_(std::move(weights)) {}

protected:
  double value(const Subset& s) const override {
    double total = 0;
    for (std::size_t u : s.elements()) total += weights_[u];
    return total;
  }

private:
  std::vector<double> weights_;
};

/// The hard instance for Twin Greedy. With T = S \ {u1, u2}:
///   f(S) = 0             if u1, u2 in S
///   f(S) = |T|           if u1, u2 not in S
///   f(S) = 1 + eps + |T|/2   otherwise
class TightExampleFunction : public SetFunctionOracle {
public:
  TightExampleFunction(std::size_t n, double epsilon,
                       std::size_t u1 = 0, std::size_t u2 = 1)
      : SetFunctionOracle(n), epsilon_(epsilon), u1_(u1), u2_(u2) {
    if (n < 4 || n % 2 != 0)
      throw InvalidArgumentError("tight example requires even n >= 4");
    if (epsilon <= 0) throw InvalidArgumentError("tight example requires epsilon > 0");
    if (u1 >= n || u2 >= n || u1 == u2)
      throw InvalidArgumentError("tight example needs two distinct marked elements");
  }

  double epsilon() const { return epsilon_; }
  std::size_t u1() const { return u1_; }
  std::size_t u2() const { return u2_; }

protected:
  double value(const Subset& s) const override {
    const bool has1 = s.contains(u1_);
    const bool has2 = s.contains(u2_);
    std::size_t t = s.size() - (has1 ? 1 : 0) - (has2 ? 1 : 0);
    if (has1 && has2) return 0.0;
    if (!has1 && !has2) return static_cast<double>(t);
    return 1.0 + epsilon_ + 0.5 * static_cast<double>(t);
  }

private:
  double epsilon_;
  std::size_t u1_, u2_;
};

/// Restriction of f to marginals over a fixed context: g(S) = f(S u E) - f(E).
/// f(E) is evaluated once up front; each g eval costs one f query.
class MarginalFunction : public SetFunctionOracle {
public:
  MarginalFunction(const SetFunctionOracle& base, Subset context)
      : SetFunctionOracle(base.ground_size()),
        base_(base),
        context_(std::move(context)),
        base_value_(base.eval(context_)) {}

protected:
  double value(const Subset& s) const override {
    return base_.eval(s.set_union(context_)) - base_value_;
  }

private:
  const SetFunctionOracle& base_;
  Subset context_;
  double base_value_;
};

} // namespace submax
