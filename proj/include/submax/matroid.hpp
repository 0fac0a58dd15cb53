#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include "submax/errors.hpp"
#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

/// Independence oracle of a matroid over ground set {0, ..., n-1}.
class MatroidOracle {
public:
  virtual ~MatroidOracle() = default;
  virtual bool is_independent(const Subset& s) const = 0;
  std::size_t ground_size() const { return n_; }

protected:
  explicit MatroidOracle(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgumentError("ground set must be non-empty");
  }

private:
  std::size_t n_;
};

/// S independent iff |S| <= k.
class UniformMatroid : public MatroidOracle {
public:
  UniformMatroid(std::size_t n, std::size_t k) : MatroidOracle(n), k_(k) {}
  bool is_independent(const Subset& s) const override { return s.size() <= k_; }
  std::size_t k() const { return k_; }

private:
  std::size_t k_;
};

/// S independent iff |S ∩ block_i| <= cap_i for every block of a partition.
class PartitionMatroid : public MatroidOracle {
public:
  PartitionMatroid(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                   std::vector<std::size_t> caps);
  bool is_independent(const Subset& s) const override;

  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& caps() const { return caps_; }

private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> caps_;
  std::vector<std::size_t> block_of_;
};

/// Rank: size of any maximal independent set, computed greedily.
std::size_t rank_of(const MatroidOracle& matroid);

/// Max-weight base restricted to `allowed`, via the matroid greedy over
/// weights sorted descending (ties by smaller id). Works for negative
/// weights too: every base has exactly rank(allowed) elements.
/// Throws InfeasibleError if `allowed` contains no base of the matroid.
template <typename Weight>
Subset max_weight_base(const MatroidOracle& matroid,
                       const std::vector<Weight>& weights,
                       const Subset& allowed) {
  const std::size_t n = matroid.ground_size();
  if (weights.size() != n) throw InvalidArgumentError("weight vector size mismatch");
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t u = 0; u < n; ++u)
    if (allowed.contains(u)) order.push_back(u);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[b] < weights[a];
  });
  Subset base(n);
  for (std::size_t u : order) {
    Subset cand = base.with(u);
    if (matroid.is_independent(cand)) base = cand;
  }
  if (base.size() != rank_of(matroid))
    throw InfeasibleError("allowed set contains no base of the matroid");
  return base;
}

/// The exchange map between two bases: g(u) = u on A ∩ B, and
/// B + u - g(u) is independent for every u in A. Found as a perfect
/// matching on (A\B) x (B\A) by augmenting paths, deterministic in id order.
/// A missing perfect matching signals a broken matroid oracle.
std::vector<std::size_t> exchange_bijection(const MatroidOracle& matroid,
                                            const Subset& a, const Subset& b);

/// A matroid instance plus 2k zero-value dummy elements appended after N.
/// f'(S) = f(S \ D); S independent in M' iff S \ D independent in M and
/// |S| <= k. Each f' evaluation costs one base-oracle query.
class DummyExtendedInstance {
public:
  DummyExtendedInstance(const SetFunctionOracle& f, const MatroidOracle& m);

  const SetFunctionOracle& extended_oracle() const { return *oracle_; }
  const MatroidOracle& extended_matroid() const { return *matroid_; }
  const SetFunctionOracle& base_oracle() const { return f_; }

  std::size_t base_size() const { return n_; }
  std::size_t extended_size() const { return n_ + 2 * k_; }
  std::size_t rank() const { return k_; }
  bool is_dummy(std::size_t u) const { return u >= n_; }

  /// Drop the dummy ids and reinterpret over the original ground set.
  Subset strip(const Subset& extended) const;
  /// Lift a base-ground subset into the extended universe.
  Subset lift(const Subset& original) const;

private:
  const SetFunctionOracle& f_;
  std::size_t n_, k_;
  std::unique_ptr<SetFunctionOracle> oracle_;
  std::unique_ptr<MatroidOracle> matroid_;
};

DummyExtendedInstance extend_with_dummies(const SetFunctionOracle& f,
                                          const MatroidOracle& m);

} // namespace submax
