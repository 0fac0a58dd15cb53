#include "submax.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "submax/errors.hpp"
#include "submax/exact.hpp"
#include "submax/instance.hpp"
#include "submax/knapsack.hpp"
#include "submax/matroid_solver.hpp"
#include "submax/packing.hpp"

struct submax_instance {
  submax::InstanceSpec spec;
};

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";
constexpr double kTol = 1e-9;

thread_local std::string g_last_error;

// algorithm asked for a constraint kind the instance does not have
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shape problems in an incoming document count as parse failures
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
submax_status guarded(Fn&& fn) {
  try {
    fn();
    return SUBMAX_OK;
  } catch (const MismatchError& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_MISMATCH;
  } catch (const DocumentError& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_PARSE;
  } catch (const submax::ResourceLimitError& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_RESOURCE_LIMIT;
  } catch (const submax::InvalidArgumentError& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUBMAX_ERR_INTERNAL;
  }
}

json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return json::object();
  json j = json::parse(options_json); // json::exception maps to PARSE
  if (!j.is_object()) throw submax::InvalidArgumentError("options must be a JSON object");
  return j;
}

submax::TieBreak parse_tie(const std::string& name) {
  if (name == "lowest-id") return submax::TieBreak::LowestId;
  if (name == "alternate-solutions") return submax::TieBreak::AlternateSolutions;
  if (name == "highest-id") return submax::TieBreak::HighestId;
  throw submax::InvalidArgumentError("unknown tie_break: " + name);
}

submax::UsmMethod parse_usm(const std::string& name) {
  if (name == "double-greedy") return submax::UsmMethod::DoubleGreedy;
  if (name == "exhaustive") return submax::UsmMethod::Exhaustive;
  throw submax::InvalidArgumentError("unknown usm: " + name);
}

json subset_to_json(const submax::Subset& s) {
  json out = json::array();
  for (std::size_t u : s.elements()) out.push_back(u);
  return out;
}

bool solution_feasible(const submax::InstanceSpec& spec, const submax::Subset& s) {
  switch (submax::constraint_kind(spec)) {
    case submax::ConstraintKind::Matroid:
      return submax::make_matroid(spec)->is_independent(s);
    case submax::ConstraintKind::Knapsack:
      return submax::make_knapsack(spec).feasible(s);
    case submax::ConstraintKind::Packing:
      return submax::make_packing(spec).feasible(s);
  }
  return false;
}

// Finite-rank guarantee of the derandomized matroid greedy.
double matroid_bound(std::size_t k) {
  const double kd = static_cast<double>(k);
  return 0.25 * (1.0 + (2.0 * (kd + 1.0) / kd - 1.0) * std::pow(1.0 - 2.0 / kd, kd - 1.0));
}

struct SolveOutput {
  json record;
  submax::Subset solution;
};

SolveOutput run_solve(const submax::InstanceSpec& spec, const json& opts) {
  if (!opts.contains("algo"))
    throw submax::InvalidArgumentError("options must name an algo");
  const std::string algo = opts.at("algo").get<std::string>();
  const double epsilon = opts.value("epsilon", 0.1);
  const submax::TieBreak tie = parse_tie(opts.value("tie_break", "lowest-id"));
  const std::uint64_t seed = opts.value("seed", std::uint64_t{0});
  const std::string usm_name = opts.value("usm", "double-greedy");
  const bool timing = opts.value("timing", false);

  const auto oracle = submax::make_oracle(spec);
  const submax::ConstraintKind kind = submax::constraint_kind(spec);
  const submax::Subset ground = submax::Subset::full(spec.n);

  json rec;
  rec["algo"] = algo;
  rec["epsilon"] = epsilon;
  rec["tie_break"] = opts.value("tie_break", "lowest-id");
  rec["seed"] = seed;
  if (opts.contains("instance")) rec["instance"] = opts.at("instance");

  submax::Subset solution(spec.n);
  double value = 0;
  const auto t0 = std::chrono::steady_clock::now();

  if (algo == "random-greedy" || algo == "derand-greedy") {
    if (kind != submax::ConstraintKind::Matroid)
      throw MismatchError(algo + " requires a matroid constraint");
    const auto matroid = submax::make_matroid(spec);
    const submax::DummyExtendedInstance inst =
        submax::extend_with_dummies(*oracle, *matroid);
    if (algo == "random-greedy") {
      const submax::RandomGreedyResult r = submax::random_greedy(inst, seed);
      solution = r.solution;
      value = r.value;
    } else {
      const submax::DerandomizedGreedyResult r = submax::derandomized_greedy(inst);
      solution = r.solution;
      value = r.value;
      rec["support_sizes"] = json::array();
      for (const auto& st : r.stats) rec["support_sizes"].push_back(st.pair_count);
    }
  } else if (algo == "twin" || algo == "threshold-twin") {
    if (kind != submax::ConstraintKind::Knapsack)
      throw MismatchError(algo + " requires a knapsack constraint");
    const submax::KnapsackConstraint knap = submax::make_knapsack(spec);
    submax::TwinGreedyResult r =
        algo == "twin"
            ? submax::twin_greedy(*oracle, knap, tie)
            : submax::threshold_twin_greedy(*oracle, knap, epsilon, tie);
    solution = r.best;
    value = r.best_value;
    rec["s1_value"] = r.s1_value;
    rec["s2_value"] = r.s2_value;
  } else if (algo == "enum-twin" || algo == "enum-threshold-twin") {
    if (kind != submax::ConstraintKind::Knapsack)
      throw MismatchError(algo + " requires a knapsack constraint");
    const submax::KnapsackConstraint knap = submax::make_knapsack(spec);
    const submax::TwinVariant variant = algo == "enum-twin"
                                            ? submax::TwinVariant::Plain
                                            : submax::TwinVariant::Threshold;
    const submax::EnumerationResult r =
        submax::enumeration_wrapper(*oracle, knap, variant, epsilon, tie);
    solution = r.solution;
    value = r.value;
  } else if (algo == "multiplicative-updates" || algo == "packing-main") {
    if (kind != submax::ConstraintKind::Packing)
      throw MismatchError(algo + " requires a packing constraint");
    const submax::PackingConstraint pack = submax::make_packing(spec);
    if (algo == "multiplicative-updates") {
      const double lambda =
          opts.contains("lambda")
              ? opts.at("lambda").get<double>()
              : std::exp(epsilon * pack.width());
      const submax::MultiplicativeUpdatesResult r =
          submax::multiplicative_updates(*oracle, ground, pack, lambda);
      solution = r.solution;
      value = r.value;
    } else {
      const submax::PackingMainResult r =
          submax::packing_main(*oracle, ground, pack, epsilon, parse_usm(usm_name));
      solution = r.solution;
      value = r.value;
      rec["usm"] = usm_name;
      rec["width"] = r.width;
      rec["width_precondition"] = r.width_precondition;
    }
  } else {
    throw submax::InvalidArgumentError("unknown algo: " + algo);
  }

  const auto t1 = std::chrono::steady_clock::now();
  rec["value"] = value;
  rec["solution"] = subset_to_json(solution);
  rec["queries"] = oracle->query_count();
  rec["feasible"] = solution_feasible(spec, solution);
  if (timing)
    rec["ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return {std::move(rec), std::move(solution)};
}

submax::ExactResult run_exact(const submax::InstanceSpec& spec) {
  const auto oracle = submax::make_oracle(spec);
  switch (submax::constraint_kind(spec)) {
    case submax::ConstraintKind::Matroid:
      return submax::brute_force_opt(*oracle, *submax::make_matroid(spec));
    case submax::ConstraintKind::Knapsack:
      return submax::brute_force_opt(*oracle, submax::make_knapsack(spec));
    case submax::ConstraintKind::Packing:
      return submax::brute_force_opt(*oracle, submax::make_packing(spec));
  }
  throw submax::InternalInvariantError("unreachable constraint kind");
}

json run_verify(const submax::InstanceSpec& spec, const json& opts) {
  const std::string algo = opts.value("algo", "");
  if (algo == "random-greedy")
    throw MismatchError("verify covers deterministic algorithms only");
  const double epsilon = opts.value("epsilon", 0.1);

  SolveOutput solved = run_solve(spec, opts);
  json rec = std::move(solved.record);
  const double value = rec.at("value").get<double>();

  const submax::ExactResult exact = run_exact(spec);
  rec["opt_value"] = exact.opt_value;
  rec["ratio"] = exact.opt_value > 0 ? value / exact.opt_value : 1.0;

  double bound = 0;
  double checked = value;
  std::string annotation;
  bool precondition = true;

  if (algo == "derand-greedy") {
    const std::size_t k = submax::rank_of(*submax::make_matroid(spec));
    bound = matroid_bound(k);
  } else if (algo == "twin" || algo == "threshold-twin") {
    // the guarantee lives on the candidate pair, which may be infeasible
    bound = algo == "twin" ? 0.5 : (1.0 - 2.0 * epsilon) / (2.0 + epsilon);
    checked = rec.at("s1_value").get<double>() + rec.at("s2_value").get<double>();
    annotation = "sum-bound";
  } else if (algo == "enum-twin") {
    bound = 0.25;
  } else if (algo == "enum-threshold-twin") {
    bound = 0.25 - epsilon;
  } else if (algo == "multiplicative-updates") {
    // bicriteria guarantee: f(S) against f(S u C) for every feasible C
    const submax::PackingConstraint pack = submax::make_packing(spec);
    const double m = static_cast<double>(std::max<std::size_t>(pack.rows(), 1));
    precondition = pack.width() >=
                   std::max(std::log(m) / (epsilon * epsilon), 1.0 / epsilon);
    bound = 0.5 * (1.0 - 3.0 * epsilon);
    annotation = "bicriteria";
    if (precondition) {
      const auto oracle = submax::make_oracle(spec);
      // maximize f(S u C) over feasible C by shifting the oracle
      const submax::MarginalFunction shifted(*oracle, solved.solution);
      const submax::ExactResult joint = submax::brute_force_opt(
          shifted, [&](const submax::Subset& c) { return pack.feasible(c); });
      const double base = oracle->eval(solved.solution);
      const double max_joint = joint.opt_value + base;
      rec["verdict"] = value >= bound * max_joint - kTol ? "pass" : "fail";
      rec["bound"] = bound;
      rec["annotation"] = annotation;
      return rec;
    }
  } else if (algo == "packing-main") {
    const submax::PackingConstraint pack = submax::make_packing(spec);
    const double m = static_cast<double>(std::max<std::size_t>(pack.rows(), 1));
    precondition =
        pack.width() >=
        std::max(9.0 * std::log(m) / (epsilon * epsilon), 3.0 / epsilon);
    const bool exhaustive = opts.value("usm", "double-greedy") == "exhaustive";
    bound = exhaustive ? (1.0 - epsilon) / 6.0
                       : (1.0 - epsilon) / (7.0 - 3.0 * epsilon);
    if (!exhaustive) annotation = "double-greedy-usm";
  } else {
    throw submax::InvalidArgumentError("verify does not know algo: " + algo);
  }

  rec["bound"] = bound;
  if (!annotation.empty()) rec["annotation"] = annotation;
  if (!precondition) {
    rec["verdict"] = "precondition-unmet";
    return rec;
  }
  rec["verdict"] =
      submax::ratio_verdict(checked, exact.opt_value, bound, kTol) ? "pass" : "fail";
  return rec;
}

json run_generate(const json& params) {
  if (!params.contains("kind") || !params.contains("n"))
    throw submax::InvalidArgumentError("generator needs kind and n");
  const std::string kind = params.at("kind").get<std::string>();
  const std::size_t n = params.at("n").get<std::size_t>();
  if (n == 0) throw submax::InvalidArgumentError("n must be at least 1");
  const std::uint64_t seed = params.value("seed", std::uint64_t{0});

  json fn;
  if (kind == "cut") {
    const submax::CutFunctionSpec cut = submax::random_cut_spec(
        n, params.value("edge_prob", 0.5), params.value("weight_min", 0.0),
        params.value("weight_max", 1.0), seed);
    fn["kind"] = "cut";
    fn["edges"] = json::array();
    for (const submax::WeightedEdge& e : cut.edges)
      fn["edges"].push_back(json::array({e.u, e.v, e.weight}));
  } else if (kind == "table") {
    fn["kind"] = "table";
    fn["values"] = submax::random_table_spec(n, seed).values;
  } else if (kind == "tight") {
    fn["kind"] = "tight";
    fn["epsilon"] = params.value("epsilon", 0.1);
    fn["u1"] = params.value("u1", std::size_t{0});
    fn["u2"] = params.value("u2", std::size_t{1});
  } else {
    throw submax::InvalidArgumentError("unknown generator kind: " + kind);
  }

  json inst;
  inst["n"] = n;
  inst["function"] = std::move(fn);
  inst["constraint"] = params.value(
      "constraint",
      json{{"kind", "uniform"}, {"k", std::max<std::size_t>(std::size_t{1}, n / 2)}});
  // round-trip through the parser so invalid combinations fail here
  return json::parse(submax::instance_to_json(submax::instance_from_json(inst.dump())));
}

} // namespace

extern "C" {

const char* submax_version(void) { return kVersion; }

const char* submax_last_error(void) { return g_last_error.c_str(); }

submax_status submax_instance_from_json(const char* text, submax_instance** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return SUBMAX_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    try {
      auto inst = std::make_unique<submax_instance>();
      inst->spec = submax::instance_from_json(text);
      *out = inst.release();
    } catch (const submax::InvalidArgumentError& e) {
      throw DocumentError(e.what());
    }
  });
}

void submax_instance_free(submax_instance* instance) { delete instance; }

submax_status submax_generate(const char* params_json, char** out_json) {
  if (!params_json || !out_json) {
    g_last_error = "null argument";
    return SUBMAX_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&] {
    const json params = json::parse(params_json);
    const json inst = run_generate(params);
    *out_json = dup_string(inst.dump(2) + "\n");
  });
}

submax_status submax_solve(const submax_instance* instance,
                           const char* options_json, char** out_json) {
  if (!instance || !out_json) {
    g_last_error = "null argument";
    return SUBMAX_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&] {
    const json opts = parse_options(options_json);
    SolveOutput out = run_solve(instance->spec, opts);
    *out_json = dup_string(out.record.dump(2) + "\n");
  });
}

submax_status submax_exact(const submax_instance* instance, char** out_json) {
  if (!instance || !out_json) {
    g_last_error = "null argument";
    return SUBMAX_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&] {
    const submax::ExactResult r = run_exact(instance->spec);
    json j;
    j["opt_value"] = r.opt_value;
    j["opt_set"] = subset_to_json(r.opt_set);
    j["enumerated"] = r.enumerated;
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

submax_status submax_verify(const submax_instance* instance,
                            const char* options_json, char** out_json) {
  if (!instance || !out_json) {
    g_last_error = "null argument";
    return SUBMAX_ERR_INVALID_ARGUMENT;
  }
  *out_json = nullptr;
  return guarded([&] {
    const json opts = parse_options(options_json);
    const json rec = run_verify(instance->spec, opts);
    *out_json = dup_string(rec.dump(2) + "\n");
  });
}

void submax_string_free(char* s) { std::free(s); }

} // extern "C"
