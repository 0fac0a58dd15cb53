#include "doctest.h"

#include <cstddef>
#include <vector>

#include "submax/errors.hpp"
#include "submax/lp.hpp"
#include "submax/rational.hpp"

#include "helpers.hpp"

using namespace submax;

namespace {

std::size_t nonzero_count(const std::vector<Rational>& x) {
  std::size_t c = 0;
  for (const Rational& v : x)
    if (v != 0) ++c;
  return c;
}

} // namespace

TEST_CASE("verify_feasible") {
  LinearSystem sys;
  sys.var_count = 2;
  CHECK(verify_feasible(sys, {Rational(0), Rational(0)}));

  sys.rows.push_back({{Rational(1), Rational(1)}, Rel::Equal, Rational(1)});
  CHECK(verify_feasible(sys, {Rational(1, 2), Rational(1, 2)}));
  CHECK(!verify_feasible(sys, {Rational(1), Rational(1)}));
  CHECK(!verify_feasible(sys, {Rational(-1), Rational(2)})); // negative variable
  CHECK_THROWS_AS(verify_feasible(sys, {Rational(1)}), InvalidArgumentError);
}

TEST_CASE("simplex vertex of a segment") {
  LinearSystem sys;
  sys.var_count = 2;
  sys.rows.push_back({{Rational(1), Rational(1)}, Rel::Equal, Rational(1)});
  // x0 is the pivot of the tight row, so x1 is the free column and the
  // positive direction drives it up
  const auto v = to_extreme_point(sys, {Rational(1, 2), Rational(1, 2)});
  CHECK(v == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(active_rank(sys, v) == 2);
  CHECK(to_extreme_point(sys, v) == v); // idempotent at a vertex
}

TEST_CASE("single upper bound walks to an end") {
  LinearSystem sys;
  sys.var_count = 1;
  sys.rows.push_back({{Rational(1)}, Rel::LessEq, Rational(1)});
  const auto v = to_extreme_point(sys, {Rational(1, 2)});
  CHECK((v[0] == 0 || v[0] == 1));
  CHECK(v[0] == 1); // positive direction first
  CHECK(active_rank(sys, v) == 1);
}

TEST_CASE("infeasible start rejected") {
  LinearSystem sys;
  sys.var_count = 1;
  sys.rows.push_back({{Rational(1)}, Rel::Equal, Rational(1)});
  CHECK_THROWS_AS(to_extreme_point(sys, {Rational(0)}), InvalidArgumentError);
}

TEST_CASE("random systems reach genuine vertices") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t vars = 3 + rng.below(5);  // 3..7
    const std::size_t rows = 2 + rng.below(4);  // 2..5

    // build the system around a known nonnegative point so it is feasible
    std::vector<Rational> x0(vars);
    for (auto& v : x0) v = Rational(static_cast<long>(rng.below(5))) / 4;

    LinearSystem sys;
    sys.var_count = vars;
    for (std::size_t r = 0; r < rows; ++r) {
      LinearConstraint row;
      row.coeffs.resize(vars);
      Rational lhs = 0;
      for (std::size_t j = 0; j < vars; ++j) {
        row.coeffs[j] = Rational(static_cast<long>(rng.below(7)) - 3);
        lhs += row.coeffs[j] * x0[j];
      }
      switch (rng.below(3)) {
        case 0:
          row.rel = Rel::Equal;
          row.rhs = lhs;
          break;
        case 1:
          row.rel = Rel::LessEq;
          row.rhs = lhs + Rational(static_cast<long>(rng.below(3))) / 2;
          break;
        default:
          row.rel = Rel::GreaterEq;
          row.rhs = lhs - Rational(static_cast<long>(rng.below(3))) / 2;
          break;
      }
      sys.rows.push_back(std::move(row));
    }
    // cap every variable so the feasible region cannot contain a line
    for (std::size_t j = 0; j < vars; ++j) {
      LinearConstraint cap;
      cap.coeffs.assign(vars, Rational(0));
      cap.coeffs[j] = 1;
      cap.rel = Rel::LessEq;
      cap.rhs = x0[j] + Rational(static_cast<long>(1 + rng.below(4)));
      sys.rows.push_back(std::move(cap));
    }

    REQUIRE(verify_feasible(sys, x0));
    const auto v = to_extreme_point(sys, x0);
    CHECK(verify_feasible(sys, v));
    CHECK(active_rank(sys, v) == vars);
    CHECK(nonzero_count(v) <= sys.rows.size());
    CHECK(to_extreme_point(sys, v) == v);
  }
}
