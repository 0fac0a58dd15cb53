#include "doctest.h"

#include "submax/errors.hpp"
#include "submax/exact.hpp"
#include "submax/instance.hpp"

#include "helpers.hpp"

using namespace submax;

TEST_CASE("zero function optimum") {
  const TableFunction f(4, std::vector<double>(16, 0.0));
  const ExactResult r = brute_force_opt(f, UniformMatroid(4, 2));
  CHECK(r.opt_set.empty());
  CHECK(r.opt_value == doctest::Approx(0.0));
  CHECK(r.enumerated == 1 + 4 + 6); // all subsets of size <= 2
}

TEST_CASE("tight example optimum") {
  const TightExampleFunction f(8, 0.1);
  const ExactResult r = brute_force_opt(f, KnapsackConstraint{std::vector<double>(8, 1.0), 8.0});
  CHECK(r.opt_value == doctest::Approx(6.0));
  CHECK(r.opt_set == Subset::from_mask(8, 0b11111100));
}

TEST_CASE("single affordable element") {
  const TableFunction f(2, {0.0, 7.0, 1.0, 7.5});
  const ExactResult r = brute_force_opt(f, KnapsackConstraint{{1.0, 5.0}, 2.0});
  CHECK(r.opt_value == doctest::Approx(7.0));
  CHECK(r.opt_set == Subset::from_mask(2, 0b01));
}

TEST_CASE("tie goes to the lowest bitmask") {
  const TableFunction f(3, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  const ExactResult r = brute_force_opt(f, UniformMatroid(3, 3));
  CHECK(r.opt_set.empty());
  // the reversed enumerator finds the same value from the other end
  const ExactResult rev =
      brute_force_opt_reversed(f, [](const Subset&) { return true; });
  CHECK(rev.opt_value == doctest::Approx(r.opt_value));
  CHECK(rev.opt_set == Subset::full(3));
}

TEST_CASE("forward and reversed enumerators agree") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5 + rng.below(4);
    const ExplicitTableSpec spec = random_table_spec(n, rng.next());
    const TableFunction f(n, spec.values);

    std::vector<double> costs(n);
    for (double& c : costs) c = 0.5 + rng.unit();
    const KnapsackConstraint knap{costs, 1.0 + rng.unit() * 2};
    const auto pred = [&](const Subset& s) { return knap.feasible(s); };

    const ExactResult fwd = brute_force_opt(f, pred);
    const ExactResult rev = brute_force_opt_reversed(f, pred);
    CHECK(fwd.opt_value == doctest::Approx(rev.opt_value));
    CHECK(fwd.enumerated == rev.enumerated);
  }
}

TEST_CASE("resource limit") {
  const CutFunction f(21, {});
  CHECK_THROWS_AS(brute_force_opt(f, UniformMatroid(21, 2)), ResourceLimitError);
}

TEST_CASE("ratio verdict") {
  CHECK(ratio_verdict(2.5, 10.0, 0.25, 1e-9));
  CHECK(!ratio_verdict(2.4, 10.0, 0.25, 1e-9));
  CHECK(ratio_verdict(0.0, 0.0, 0.5, 1e-9));
  CHECK(!ratio_verdict(-1.0, 0.0, 0.5, 1e-9));
}
