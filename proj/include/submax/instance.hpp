#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "submax/knapsack.hpp"
#include "submax/matroid.hpp"
#include "submax/packing.hpp"
#include "submax/set_function.hpp"

namespace submax {

struct CutFunctionSpec {
  std::vector<WeightedEdge> edges;
};

struct ExplicitTableSpec {
  std::vector<double> values; // 2^n entries indexed by bitmask
};

struct TightExampleSpec {
  double epsilon = 0.1;
  std::size_t u1 = 0, u2 = 1;
};

using FunctionSpec = std::variant<CutFunctionSpec, ExplicitTableSpec, TightExampleSpec>;

struct UniformSpec {
  std::size_t k = 1;
};

struct PartitionSpec {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> caps;
};

struct KnapsackSpec {
  std::vector<double> costs;
  double budget = 0;
};

struct PackingSpec {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

using ConstraintSpec = std::variant<UniformSpec, PartitionSpec, KnapsackSpec, PackingSpec>;

struct InstanceSpec {
  std::size_t n = 0;
  FunctionSpec function;
  ConstraintSpec constraint;
};

enum class ConstraintKind { Matroid, Knapsack, Packing };
ConstraintKind constraint_kind(const InstanceSpec& spec);

/// Parse / serialize the on-disk JSON format:
///   {"n": int, "function": {"kind": ...}, "constraint": {"kind": ...}}
/// Serialization is deterministic (sorted keys, shortest round-trip floats).
InstanceSpec instance_from_json(const std::string& text);
std::string instance_to_json(const InstanceSpec& spec);

std::unique_ptr<SetFunctionOracle> make_oracle(const InstanceSpec& spec);
std::unique_ptr<MatroidOracle> make_matroid(const InstanceSpec& spec);
KnapsackConstraint make_knapsack(const InstanceSpec& spec);
PackingConstraint make_packing(const InstanceSpec& spec);

/// Seeded random weighted graph; the induced cut function is non-negative
/// and submodular by construction.
CutFunctionSpec random_cut_spec(std::size_t n, double edge_prob, double weight_min,
                                double weight_max, std::uint64_t seed);

/// Seeded random non-monotone table: a cut function plus a weighted coverage
/// mixture, materialized as 2^n values (n <= 12).
ExplicitTableSpec random_table_spec(std::size_t n, std::uint64_t seed);

} // namespace submax
