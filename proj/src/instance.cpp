#include "submax/instance.hpp"

#include <cstdint>

#include "json.hpp"
#include "submax/errors.hpp"

namespace submax {

namespace {

using nlohmann::json;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_real(std::uint64_t& state) {
  return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53;
}

json require(const json& j, const char* key) {
  if (!j.contains(key))
    throw InvalidArgumentError(std::string("missing field: ") + key);
  return j.at(key);
}

FunctionSpec parse_function(const json& j, std::size_t n) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "cut") {
    CutFunctionSpec spec;
    for (const json& e : require(j, "edges")) {
      if (!e.is_array() || e.size() != 3)
        throw InvalidArgumentError("cut edge must be [u, v, weight]");
      spec.edges.push_back(
          {e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
    }
    return spec;
  }
  if (kind == "table") {
    ExplicitTableSpec spec;
    spec.values = require(j, "values").get<std::vector<double>>();
    if (n > 20 || spec.values.size() != (std::size_t{1} << n))
      throw InvalidArgumentError("table must carry exactly 2^n values, n <= 20");
    return spec;
  }
  if (kind == "tight") {
    TightExampleSpec spec;
    spec.epsilon = require(j, "epsilon").get<double>();
    if (j.contains("u1")) spec.u1 = j.at("u1").get<std::size_t>();
    if (j.contains("u2")) spec.u2 = j.at("u2").get<std::size_t>();
    return spec;
  }
  throw InvalidArgumentError("unknown function kind: " + kind);
}

ConstraintSpec parse_constraint(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "uniform")
    return UniformSpec{require(j, "k").get<std::size_t>()};
  if (kind == "partition") {
    PartitionSpec spec;
    spec.blocks = require(j, "blocks").get<std::vector<std::vector<std::size_t>>>();
    spec.caps = require(j, "caps").get<std::vector<std::size_t>>();
    return spec;
  }
  if (kind == "knapsack") {
    KnapsackSpec spec;
    spec.costs = require(j, "costs").get<std::vector<double>>();
    spec.budget = require(j, "budget").get<double>();
    return spec;
  }
  if (kind == "packing") {
    PackingSpec spec;
    spec.a = require(j, "A").get<std::vector<std::vector<double>>>();
    spec.b = require(j, "b").get<std::vector<double>>();
    return spec;
  }
  throw InvalidArgumentError("unknown constraint kind: " + kind);
}

} // namespace

ConstraintKind constraint_kind(const InstanceSpec& spec) {
  if (std::holds_alternative<KnapsackSpec>(spec.constraint))
    return ConstraintKind::Knapsack;
  if (std::holds_alternative<PackingSpec>(spec.constraint))
    return ConstraintKind::Packing;
  return ConstraintKind::Matroid;
}

InstanceSpec instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("instance JSON parse error: ") + e.what());
  }
  try {
    InstanceSpec spec;
    spec.n = require(j, "n").get<std::size_t>();
    if (spec.n == 0) throw InvalidArgumentError("n must be at least 1");
    spec.function = parse_function(require(j, "function"), spec.n);
    spec.constraint = parse_constraint(require(j, "constraint"));
    return spec;
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("malformed instance: ") + e.what());
  }
}

std::string instance_to_json(const InstanceSpec& spec) {
  json j;
  j["n"] = spec.n;

  json f;
  if (const auto* cut = std::get_if<CutFunctionSpec>(&spec.function)) {
    f["kind"] = "cut";
    f["edges"] = json::array();
    for (const WeightedEdge& e : cut->edges)
      f["edges"].push_back(json::array({e.u, e.v, e.weight}));
  } else if (const auto* table = std::get_if<ExplicitTableSpec>(&spec.function)) {
    f["kind"] = "table";
    f["values"] = table->values;
  } else {
    const auto& tight = std::get<TightExampleSpec>(spec.function);
    f["kind"] = "tight";
    f["epsilon"] = tight.epsilon;
    f["u1"] = tight.u1;
    f["u2"] = tight.u2;
  }
  j["function"] = std::move(f);

  json c;
  if (const auto* uni = std::get_if<UniformSpec>(&spec.constraint)) {
    c["kind"] = "uniform";
    c["k"] = uni->k;
  } else if (const auto* part = std::get_if<PartitionSpec>(&spec.constraint)) {
    c["kind"] = "partition";
    c["blocks"] = part->blocks;
    c["caps"] = part->caps;
  } else if (const auto* knap = std::get_if<KnapsackSpec>(&spec.constraint)) {
    c["kind"] = "knapsack";
    c["costs"] = knap->costs;
    c["budget"] = knap->budget;
  } else {
    const auto& pack = std::get<PackingSpec>(spec.constraint);
    c["kind"] = "packing";
    c["A"] = pack.a;
    c["b"] = pack.b;
  }
  j["constraint"] = std::move(c);

  return j.dump(2) + "\n";
}

std::unique_ptr<SetFunctionOracle> make_oracle(const InstanceSpec& spec) {
  if (const auto* cut = std::get_if<CutFunctionSpec>(&spec.function))
    return std::make_unique<CutFunction>(spec.n, cut->edges);
  if (const auto* table = std::get_if<ExplicitTableSpec>(&spec.function))
    return std::make_unique<TableFunction>(spec.n, table->values);
  const auto& tight = std::get<TightExampleSpec>(spec.function);
  return std::make_unique<TightExampleFunction>(spec.n, tight.epsilon, tight.u1,
                                                tight.u2);
}

std::unique_ptr<MatroidOracle> make_matroid(const InstanceSpec& spec) {
  if (const auto* uni = std::get_if<UniformSpec>(&spec.constraint))
    return std::make_unique<UniformMatroid>(spec.n, uni->k);
  if (const auto* part = std::get_if<PartitionSpec>(&spec.constraint))
    return std::make_unique<PartitionMatroid>(spec.n, part->blocks, part->caps);
  throw InvalidArgumentError("constraint is not a matroid");
}

KnapsackConstraint make_knapsack(const InstanceSpec& spec) {
  const auto* knap = std::get_if<KnapsackSpec>(&spec.constraint);
  if (!knap) throw InvalidArgumentError("constraint is not a knapsack");
  KnapsackConstraint k{knap->costs, knap->budget};
  if (k.costs.size() != spec.n)
    throw InvalidArgumentError("knapsack cost vector size mismatch");
  k.validate();
  return k;
}

PackingConstraint make_packing(const InstanceSpec& spec) {
  const auto* pack = std::get_if<PackingSpec>(&spec.constraint);
  if (!pack) throw InvalidArgumentError("constraint is not a packing system");
  PackingConstraint p{pack->a, pack->b};
  p.validate(spec.n);
  return p;
}

CutFunctionSpec random_cut_spec(std::size_t n, double edge_prob, double weight_min,
                                double weight_max, std::uint64_t seed) {
  if (n < 2) throw InvalidArgumentError("cut generator needs n >= 2");
  if (!(edge_prob > 0 && edge_prob <= 1))
    throw InvalidArgumentError("edge probability must lie in (0, 1]");
  if (weight_min < 0 || weight_max < weight_min)
    throw InvalidArgumentError("weight range must satisfy 0 <= min <= max");
  std::uint64_t state = seed;
  CutFunctionSpec spec;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit_real(state) < edge_prob) {
        const double w = weight_min + unit_real(state) * (weight_max - weight_min);
        spec.edges.push_back({u, v, w});
      }
  return spec;
}

ExplicitTableSpec random_table_spec(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > 12)
    throw InvalidArgumentError("table generator supports 2 <= n <= 12");
  std::uint64_t state = seed;
  const CutFunctionSpec cut = random_cut_spec(n, 0.5, 0.0, 1.0, splitmix(state));

  // coverage part: a few random areas, each worth its weight once touched
  constexpr std::size_t kAreas = 3;
  std::uint64_t areas[kAreas];
  double area_weight[kAreas];
  for (std::size_t j = 0; j < kAreas; ++j) {
    areas[j] = splitmix(state) & ((std::uint64_t{1} << n) - 1);
    area_weight[j] = unit_real(state);
  }

  ExplicitTableSpec spec;
  spec.values.resize(std::size_t{1} << n, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double v = 0;
    for (const WeightedEdge& e : cut.edges)
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.weight;
    for (std::size_t j = 0; j < kAreas; ++j)
      if (mask & areas[j]) v += area_weight[j];
    spec.values[mask] = v;
  }
  return spec;
}

} // namespace submax
