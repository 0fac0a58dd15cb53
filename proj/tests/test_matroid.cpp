#include "doctest.h"

#include <cstdint>

#include "submax/errors.hpp"
#include "submax/matroid.hpp"
#include "submax/set_function.hpp"
#include "submax/subset.hpp"

#include "helpers.hpp"

using namespace submax;

namespace {

// downward closure + exchange axiom, checked over all subset pairs
bool satisfies_matroid_axioms(const MatroidOracle& m) {
  const std::size_t n = m.ground_size();
  REQUIRE(n <= 10);
  const std::uint64_t space = std::uint64_t{1} << n;
  if (!m.is_independent(Subset(n))) return false;
  for (std::uint64_t mask = 0; mask < space; ++mask) {
    const Subset s = Subset::from_mask(n, mask);
    if (!m.is_independent(s)) continue;
    for (std::size_t u : s.elements())
      if (!m.is_independent(s.without(u))) return false;
  }
  for (std::uint64_t am = 0; am < space; ++am) {
    const Subset a = Subset::from_mask(n, am);
    if (!m.is_independent(a)) continue;
    for (std::uint64_t bm = 0; bm < space; ++bm) {
      const Subset b = Subset::from_mask(n, bm);
      if (!m.is_independent(b) || b.size() <= a.size()) continue;
      bool extended = false;
      for (std::size_t u : b.set_minus(a).elements())
        if (m.is_independent(a.with(u))) {
          extended = true;
          break;
        }
      if (!extended) return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("ranks") {
  CHECK(rank_of(UniformMatroid(5, 3)) == 3);
  CHECK(rank_of(PartitionMatroid(4, {{0, 1}, {2, 3}}, {1, 1})) == 2);
  CHECK(rank_of(UniformMatroid(3, 5)) == 3); // rank capped by the ground set
}

TEST_CASE("partition matroid validation") {
  CHECK_THROWS_AS(PartitionMatroid(4, {{0, 1}, {1, 2, 3}}, {1, 1}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(PartitionMatroid(4, {{0, 1}}, {1}), InvalidArgumentError);
  CHECK_THROWS_AS(PartitionMatroid(4, {{0, 1}, {2, 3}}, {1}), InvalidArgumentError);
}

TEST_CASE("matroid axioms hold for shipped families") {
  CHECK(satisfies_matroid_axioms(UniformMatroid(6, 3)));
  CHECK(satisfies_matroid_axioms(PartitionMatroid(6, {{0, 1, 2}, {3, 4}, {5}}, {2, 1, 1})));
  CHECK(satisfies_matroid_axioms(PartitionMatroid(5, {{0, 1, 2, 3, 4}}, {0})));
}

TEST_CASE("max weight base examples") {
  const UniformMatroid m(4, 2);
  CHECK(max_weight_base(m, std::vector<double>{5, 1, 3, 2}, Subset::full(4)) ==
        Subset::from_mask(4, 0b0101));

  const UniformMatroid m2(2, 2);
  CHECK(max_weight_base(m2, std::vector<double>{-1, -2}, Subset::full(2)) ==
        Subset::from_mask(2, 0b11));

  CHECK_THROWS_AS(
      max_weight_base(m, std::vector<double>{1, 1, 1, 1}, Subset::from_mask(4, 0b0001)),
      InfeasibleError);
}

TEST_CASE("max weight base matches exhaustive search") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + rng.below(5); // 4..8
    std::vector<double> w(n);
    for (double& x : w) x = rng.unit() * 2 - 1;

    const UniformMatroid uni(n, 1 + rng.below(n));
    const Subset best_uni = testing::brute_force_max_weight_base(uni, w, Subset::full(n));
    CHECK(max_weight_base(uni, w, Subset::full(n)) == best_uni);

    std::vector<std::vector<std::size_t>> blocks(2);
    for (std::size_t u = 0; u < n; ++u) blocks[u % 2].push_back(u);
    const PartitionMatroid part(n, blocks,
                                {1 + rng.below(blocks[0].size()),
                                 1 + rng.below(blocks[1].size())});
    const Subset best_part =
        testing::brute_force_max_weight_base(part, w, Subset::full(n));
    double got = 0, want = 0;
    for (std::size_t u : max_weight_base(part, w, Subset::full(n)).elements())
      got += w[u];
    for (std::size_t u : best_part.elements()) want += w[u];
    CHECK(got == doctest::Approx(want));
  }
}

TEST_CASE("exchange bijection identity and forced matching") {
  const UniformMatroid uni(6, 3);
  const Subset a = Subset::from_mask(6, 0b000111);
  const auto g_same = exchange_bijection(uni, a, a);
  for (std::size_t u : a.elements()) CHECK(g_same[u] == u);

  const PartitionMatroid part(4, {{0, 1}, {2, 3}}, {1, 1});
  const Subset pa = Subset::from_mask(4, 0b0101); // {0, 2}
  const Subset pb = Subset::from_mask(4, 0b1010); // {1, 3}
  const auto g = exchange_bijection(part, pa, pb);
  CHECK(g[0] == 1);
  CHECK(g[2] == 3);
}

TEST_CASE("exchange bijection satisfies both guarantees on random bases") {
  testing::Rng rng(5);
  const PartitionMatroid m(8, {{0, 1, 2}, {3, 4, 5}, {6, 7}}, {1, 2, 1});
  const std::size_t k = rank_of(m);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> wa(8), wb(8);
    for (std::size_t u = 0; u < 8; ++u) {
      wa[u] = rng.unit();
      wb[u] = rng.unit();
    }
    const Subset a = max_weight_base(m, wa, Subset::full(8));
    const Subset b = max_weight_base(m, wb, Subset::full(8));
    const auto g = exchange_bijection(m, a, b);

    std::vector<bool> hit(8, false);
    for (std::size_t u : a.elements()) {
      CHECK(b.contains(g[u]));
      if (a.contains(u) && b.contains(u)) CHECK(g[u] == u);
      CHECK(m.is_independent(b.with(u).without(g[u])));
      CHECK(!hit[g[u]]); // one-to-one
      hit[g[u]] = true;
    }
    CHECK(a.size() == k);
  }
}

TEST_CASE("dummy extension") {
  const CutFunction f = testing::triangle_cut();
  const UniformMatroid m(3, 2);
  const DummyExtendedInstance inst = extend_with_dummies(f, m);

  CHECK(inst.base_size() == 3);
  CHECK(inst.rank() == 2);
  CHECK(inst.extended_size() == 7);
  CHECK(rank_of(inst.extended_matroid()) == 2);
  CHECK(inst.is_dummy(3));
  CHECK(!inst.is_dummy(2));

  // dummies carry no value
  Subset dummies(7);
  dummies.add(4);
  dummies.add(6);
  CHECK(inst.extended_oracle().eval(dummies) == doctest::Approx(f.eval(Subset(3))));

  Subset mixed(7);
  mixed.add(0);
  mixed.add(5);
  CHECK(inst.extended_oracle().eval(mixed) == doctest::Approx(2.0));
  CHECK(inst.extended_matroid().is_independent(mixed));
  CHECK(inst.strip(mixed) == Subset::from_mask(3, 0b001));
  CHECK(inst.lift(Subset::from_mask(3, 0b001)).contains(0));

  // size cap: k+1 elements are dependent even if all dummies
  Subset too_big(7);
  too_big.add(3);
  too_big.add(4);
  too_big.add(5);
  CHECK(!inst.extended_matroid().is_independent(too_big));
}
