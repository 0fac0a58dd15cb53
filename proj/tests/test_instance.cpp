#include "doctest.h"

#include "submax/errors.hpp"
#include "submax/instance.hpp"

#include "helpers.hpp"

using namespace submax;

namespace {

const char* kCutInstance = R"({
  "n": 3,
  "function": {"kind": "cut", "edges": [[0, 1, 1.0], [1, 2, 0.5]]},
  "constraint": {"kind": "uniform", "k": 2}
})";

} // namespace

TEST_CASE("parse a cut instance") {
  const InstanceSpec spec = instance_from_json(kCutInstance);
  CHECK(spec.n == 3);
  CHECK(constraint_kind(spec) == ConstraintKind::Matroid);

  const auto oracle = make_oracle(spec);
  CHECK(oracle->eval(Subset::from_mask(3, 0b010)) == doctest::Approx(1.5));
  const auto matroid = make_matroid(spec);
  CHECK(rank_of(*matroid) == 2);

  CHECK_THROWS_AS(make_knapsack(spec), InvalidArgumentError);
  CHECK_THROWS_AS(make_packing(spec), InvalidArgumentError);
}

TEST_CASE("round trip is the identity on the wire format") {
  const InstanceSpec spec = instance_from_json(kCutInstance);
  const std::string once = instance_to_json(spec);
  const std::string twice = instance_to_json(instance_from_json(once));
  CHECK(once == twice);
}

TEST_CASE("all constraint kinds round trip") {
  InstanceSpec spec;
  spec.n = 4;
  spec.function = TightExampleSpec{0.25, 0, 1};

  spec.constraint = PartitionSpec{{{0, 1}, {2, 3}}, {1, 1}};
  CHECK(rank_of(*make_matroid(instance_from_json(instance_to_json(spec)))) == 2);

  spec.constraint = KnapsackSpec{{1.0, 1.0, 2.0, 2.0}, 3.0};
  const InstanceSpec knap = instance_from_json(instance_to_json(spec));
  CHECK(make_knapsack(knap).budget == doctest::Approx(3.0));
  CHECK(constraint_kind(knap) == ConstraintKind::Knapsack);

  spec.constraint = PackingSpec{{{0.5, 0.5, 0.25, 0.25}}, {2.0}};
  const InstanceSpec pack = instance_from_json(instance_to_json(spec));
  CHECK(make_packing(pack).width() == doctest::Approx(4.0));
  CHECK(constraint_kind(pack) == ConstraintKind::Packing);

  const auto oracle = make_oracle(pack);
  CHECK(oracle->eval(Subset::from_mask(4, 0b0001)) == doctest::Approx(1.25));
}

TEST_CASE("table instances keep their values") {
  const ExplicitTableSpec table = random_table_spec(5, 7);
  InstanceSpec spec;
  spec.n = 5;
  spec.function = table;
  spec.constraint = UniformSpec{2};
  const InstanceSpec back = instance_from_json(instance_to_json(spec));
  const auto oracle = make_oracle(back);
  for (std::uint64_t mask = 0; mask < 32; ++mask)
    CHECK(oracle->eval(Subset::from_mask(5, mask)) ==
          doctest::Approx(table.values[mask]));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(instance_from_json("not json"), InvalidArgumentError);
  CHECK_THROWS_AS(instance_from_json("{}"), InvalidArgumentError);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 0, "function": {"kind": "cut", "edges": []},
    "constraint": {"kind": "uniform", "k": 1}})"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 2, "function": {"kind": "mystery"},
    "constraint": {"kind": "uniform", "k": 1}})"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 2, "function": {"kind": "table",
    "values": [0, 1, 2]}, "constraint": {"kind": "uniform", "k": 1}})"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 2,
    "function": {"kind": "cut", "edges": []},
    "constraint": {"kind": "wat"}})"),
                  InvalidArgumentError);
}
