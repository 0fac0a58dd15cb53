#include "submax/matroid.hpp"

namespace submax {

PartitionMatroid::PartitionMatroid(std::size_t n,
                                   std::vector<std::vector<std::size_t>> blocks,
                                   std::vector<std::size_t> caps)
    : MatroidOracle(n), blocks_(std::move(blocks)), caps_(std::move(caps)),
      block_of_(n, static_cast<std::size_t>(-1)) {
  if (blocks_.size() != caps_.size())
    throw InvalidArgumentError("partition matroid: one cap per block required");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t u : blocks_[b]) {
      if (u >= n) throw InvalidArgumentError("partition matroid: element out of range");
      if (block_of_[u] != static_cast<std::size_t>(-1))
        throw InvalidArgumentError("partition matroid: blocks must be disjoint");
      block_of_[u] = b;
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    if (block_of_[u] == static_cast<std::size_t>(-1))
      throw InvalidArgumentError("partition matroid: blocks must cover the ground set");
}

bool PartitionMatroid::is_independent(const Subset& s) const {
  std::vector<std::size_t> used(blocks_.size(), 0);
  for (std::size_t u : s.elements())
    if (++used[block_of_[u]] > caps_[block_of_[u]]) return false;
  return true;
}

std::size_t rank_of(const MatroidOracle& matroid) {
  Subset s(matroid.ground_size());
  for (std::size_t u = 0; u < matroid.ground_size(); ++u) {
    Subset cand = s.with(u);
    if (matroid.is_independent(cand)) s = cand;
  }
  return s.size();
}

std::vector<std::size_t> exchange_bijection(const MatroidOracle& matroid,
                                            const Subset& a, const Subset& b) {
  if (!matroid.is_independent(a) || !matroid.is_independent(b) ||
      a.size() != b.size())
    throw InvalidArgumentError("exchange_bijection requires two bases");

  const std::vector<std::size_t> left = a.set_minus(b).elements();
  const std::vector<std::size_t> right = b.set_minus(a).elements();
  const std::size_t m = left.size();

  // adm[i][j]: swapping right[j] for left[i] keeps B independent
  std::vector<std::vector<char>> adm(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      adm[i][j] = matroid.is_independent(b.without(right[j]).with(left[i])) ? 1 : 0;

  std::vector<std::size_t> match_right(m, static_cast<std::size_t>(-1));
  std::vector<std::size_t> match_left(m, static_cast<std::size_t>(-1));
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < m; ++j) {
      if (!adm[i][j] || visited[j]) continue;
      visited[j] = 1;
      if (match_right[j] == static_cast<std::size_t>(-1) ||
          self(self, match_right[j])) {
        match_right[j] = i;
        match_left[i] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    visited.assign(m, 0);
    if (!augment(augment, i))
      throw InternalInvariantError(
          "no perfect exchange matching: matroid oracle violates the exchange axiom");
  }

  std::vector<std::size_t> g(matroid.ground_size(), static_cast<std::size_t>(-1));
  for (std::size_t u : a.elements()) g[u] = u; // identity on A ∩ B
  for (std::size_t i = 0; i < m; ++i) g[left[i]] = right[match_left[i]];
  return g;
}

namespace {

class ExtendedOracle : public SetFunctionOracle {
public:
  ExtendedOracle(const SetFunctionOracle& base, std::size_t n, std::size_t dummies)
      : SetFunctionOracle(n + dummies), base_(base), n_(n) {}

protected:
  double value(const Subset& s) const override {
    Subset stripped(n_);
    for (std::size_t u : s.elements())
      if (u < n_) stripped.add(u);
    return base_.eval(stripped);
  }

private:
  const SetFunctionOracle& base_;
  std::size_t n_;
};

class ExtendedMatroid : public MatroidOracle {
public:
  ExtendedMatroid(const MatroidOracle& base, std::size_t n, std::size_t k)
      : MatroidOracle(n + 2 * k), base_(base), n_(n), k_(k) {}

  bool is_independent(const Subset& s) const override {
    if (s.size() > k_) return false;
    Subset real(n_);
    for (std::size_t u : s.elements())
      if (u < n_) real.add(u);
    return base_.is_independent(real);
  }

private:
  const MatroidOracle& base_;
  std::size_t n_, k_;
};

} // namespace

DummyExtendedInstance::DummyExtendedInstance(const SetFunctionOracle& f,
                                             const MatroidOracle& m)
    : f_(f), n_(f.ground_size()), k_(rank_of(m)) {
  if (m.ground_size() != n_)
    throw InvalidArgumentError("oracle and matroid ground sets differ");
  if (k_ < 1) throw InvalidArgumentError("matroid rank must be at least 1");
  oracle_ = std::make_unique<ExtendedOracle>(f, n_, 2 * k_);
  matroid_ = std::make_unique<ExtendedMatroid>(m, n_, k_);
}

Subset DummyExtendedInstance::strip(const Subset& extended) const {
  Subset s(n_);
  for (std::size_t u : extended.elements())
    if (u < n_) s.add(u);
  return s;
}

Subset DummyExtendedInstance::lift(const Subset& original) const {
  Subset s(extended_size());
  for (std::size_t u : original.elements()) s.add(u);
  return s;
}

DummyExtendedInstance extend_with_dummies(const SetFunctionOracle& f,
                                          const MatroidOracle& m) {
  return DummyExtendedInstance(f, m);
}

} // namespace submax
