#include "doctest.h"

#include <cmath>
#include <limits>

#include "submax/errors.hpp"
#include "submax/exact.hpp"
#include "submax/instance.hpp"
#include "submax/packing.hpp"

#include "helpers.hpp"

using namespace submax;

TEST_CASE("width") {
  CHECK(PackingConstraint{{{1.0}}, {1.0}}.width() == doctest::Approx(1.0));
  CHECK(PackingConstraint{{{0.5, 0.25}}, {3.0}}.width() == doctest::Approx(6.0));
  CHECK(PackingConstraint{{{0.0, 0.0}}, {2.0}}.width() ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("constraint validation and feasibility") {
  CHECK_THROWS_AS((PackingConstraint{{{1.5}}, {1.0}}.validate(1)), InvalidArgumentError);
  CHECK_THROWS_AS((PackingConstraint{{{0.5}}, {0.5}}.validate(1)), InvalidArgumentError);
  CHECK_THROWS_AS((PackingConstraint{{{0.5, 0.5}}, {1.0}}.validate(1)),
                  InvalidArgumentError);
  const PackingConstraint p{{{0.5, 0.5, 0.5}}, {1.0}};
  CHECK(p.feasible(Subset::from_mask(3, 0b011)));
  CHECK(!p.feasible(Subset::from_mask(3, 0b111)));
}

TEST_CASE("multiplicative updates on a modular function") {
  // W = 3, unit-third costs: the greedy takes elements in value order
  const ModularFunction f({5.0, 4.0, 3.0});
  const PackingConstraint p{{{1.0 / 3, 1.0 / 3, 1.0 / 3}}, {1.0}};
  const double eps = 1.0 / 3;
  const MultiplicativeUpdatesResult r =
      multiplicative_updates(f, Subset::full(3), p, std::exp(eps * p.width()));
  CHECK(p.feasible(r.solution));
  REQUIRE(!r.order.empty());
  CHECK(r.order[0] == 0); // highest value first
  for (std::size_t i = 1; i < r.order.size(); ++i)
    CHECK(r.order[i] > r.order[i - 1]);

  // bicriteria guarantee against every feasible companion set
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const Subset c = Subset::from_mask(3, mask);
    if (!p.feasible(c)) continue;
    CHECK(r.value >= 0.5 * (1 - 3 * eps) * f.eval(r.solution.set_union(c)) - 1e-9);
  }
}

TEST_CASE("multiplicative updates corner cases") {
  const TableFunction zero(3, std::vector<double>(8, 0.0));
  const PackingConstraint p{{{0.5, 0.5, 0.5}}, {1.0}};
  const MultiplicativeUpdatesResult r =
      multiplicative_updates(zero, Subset::full(3), p, 2.0);
  CHECK(r.solution.empty());

  // an all-zero column costs nothing and is picked before priced elements
  const ModularFunction f({1.0, 10.0});
  const PackingConstraint q{{{0.5, 0.0}}, {1.0}};
  const MultiplicativeUpdatesResult r2 =
      multiplicative_updates(f, Subset::full(2), q, 2.0);
  REQUIRE(r2.order.size() >= 1);
  CHECK(r2.order[0] == 1);
  CHECK(r2.solution.contains(1));

  CHECK_THROWS_AS(multiplicative_updates(f, Subset::full(2), q, 1.0),
                  InvalidArgumentError);
}

TEST_CASE("multiplicative updates output always feasible") {
  testing::Rng rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 5 + rng.below(5);
    const ExplicitTableSpec spec = random_table_spec(n, rng.next());
    const TableFunction f(n, spec.values);
    PackingConstraint p;
    const std::size_t m = 1 + rng.below(2);
    for (std::size_t i = 0; i < m; ++i) {
      p.a.emplace_back(n);
      for (double& e : p.a.back()) e = rng.unit();
      p.b.push_back(1.0 + rng.unit() * 2);
    }
    const MultiplicativeUpdatesResult r =
        multiplicative_updates(f, Subset::full(n), p, 1.0 + rng.unit() * 20);
    CHECK(p.feasible(r.solution));
  }
}

TEST_CASE("double greedy") {
  SUBCASE("hand trace") {
    // f(∅)=0, f({0})=2, f({1})=1, f({0,1})=0
    const TableFunction f(2, {0.0, 2.0, 1.0, 0.0});
    const UsmResult r = usm_double_greedy(f, Subset::full(2));
    CHECK(r.solution == Subset::from_mask(2, 0b01));
    CHECK(r.value == doctest::Approx(2.0));
  }

  SUBCASE("modular nonnegative keeps everything") {
    testing::Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + rng.below(6);
      std::vector<double> w(n);
      for (double& x : w) x = rng.unit();
      const ModularFunction f(w);
      CHECK(usm_double_greedy(f, Subset::full(n)).solution == Subset::full(n));
    }
  }

  SUBCASE("one third of the exhaustive optimum") {
    testing::Rng rng(73);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 5 + rng.below(6); // 5..10
      const ExplicitTableSpec spec = random_table_spec(n, rng.next());
      const TableFunction f(n, spec.values);
      const UsmResult dg = usm_double_greedy(f, Subset::full(n));
      const UsmResult ex = usm_exhaustive(f, Subset::full(n));
      CHECK(dg.value >= ex.value / 3.0 - 1e-9);
      CHECK(ex.value >= dg.value - 1e-9);
    }
  }
}

TEST_CASE("exhaustive usm") {
  const TableFunction zero(3, std::vector<double>(8, 0.0));
  CHECK(usm_exhaustive(zero, Subset::full(3)).solution.empty());

  const TableFunction f(3, {0, 5, 4, 8, 3, 7, 6, 9});
  const UsmResult r = usm_exhaustive(f, Subset::full(3));
  CHECK(r.value == doctest::Approx(9.0));
  CHECK(r.solution == Subset::from_mask(3, 0b111));

  // restriction to a sub-ground-set
  const UsmResult sub = usm_exhaustive(f, Subset::from_mask(3, 0b011));
  CHECK(sub.value == doctest::Approx(8.0));

  const CutFunction big(21, {});
  CHECK_THROWS_AS(usm_exhaustive(big, Subset::full(21)), ResourceLimitError);
}

TEST_CASE("packing main") {
  SUBCASE("zero function") {
    const TableFunction zero(4, std::vector<double>(16, 0.0));
    const PackingConstraint p{{{0.5, 0.5, 0.5, 0.5}}, {1.0}};
    const PackingMainResult r =
        packing_main(zero, Subset::full(4), p, 1.0 / 3, UsmMethod::Exhaustive);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(p.feasible(r.solution));
  }

  SUBCASE("guarantee on wide instances") {
    testing::Rng rng(79);
    const double eps = 1.0 / 3;
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 10;
      const ExplicitTableSpec spec = random_table_spec(n, rng.next());
      const TableFunction f(n, spec.values);
      PackingConstraint p;
      p.a.emplace_back(n);
      for (double& e : p.a.back()) e = rng.unit() / 9.0; // width >= 9
      p.b.push_back(1.0);
      REQUIRE(p.width() >= 9.0);

      const PackingMainResult r =
          packing_main(f, Subset::full(n), p, eps, UsmMethod::Exhaustive);
      CHECK(r.width_precondition);
      CHECK(p.feasible(r.solution));
      CHECK(p.feasible(r.s1_prime));
      CHECK(r.s1_prime.set_minus(r.s1).empty());
      CHECK(r.s1.set_intersect(r.s2).empty());

      const ExactResult opt = brute_force_opt(f, p);
      CHECK(r.value >= (1 - eps) / 6.0 * opt.opt_value - 1e-9);
    }
  }

  SUBCASE("narrow instance reports the unmet precondition") {
    const ModularFunction f({1.0, 1.0});
    const PackingConstraint p{{{1.0, 1.0}}, {1.0}};
    const PackingMainResult r =
        packing_main(f, Subset::full(2), p, 1.0 / 3, UsmMethod::DoubleGreedy);
    CHECK(!r.width_precondition); // W = 1 < 3/eps = 9
    CHECK(p.feasible(r.solution));
  }
}
