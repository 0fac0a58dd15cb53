// Command-line front end. Talks to the solver library exclusively through
// the C interface in submax.h.
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "submax.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitResourceLimit = 4;

int status_exit_code(submax_status s) {
  switch (s) {
    case SUBMAX_OK: return 0;
    case SUBMAX_ERR_PARSE:
    case SUBMAX_ERR_INVALID_ARGUMENT:
    case SUBMAX_ERR_MISMATCH: return kExitUsage;
    case SUBMAX_ERR_RESOURCE_LIMIT: return kExitResourceLimit;
    case SUBMAX_ERR_INTERNAL: return 1;
  }
  return 1;
}

int fail(submax_status s) {
  std::cerr << "error: " << submax_last_error() << "\n";
  return status_exit_code(s);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  submax_string_free(s);
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

std::vector<std::vector<double>> parse_real_rows(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';'))
    if (!row.empty()) out.push_back(parse_reals(row));
  return out;
}

std::vector<std::vector<std::size_t>> parse_id_rows(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : parse_real_rows(text)) {
    out.emplace_back();
    for (double v : row) out.back().push_back(static_cast<std::size_t>(v));
  }
  return out;
}

struct GenerateArgs {
  std::string kind = "cut";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double edge_prob = 0.5, weight_min = 0.0, weight_max = 1.0;
  double epsilon = 0.1;
  std::size_t u1 = 0, u2 = 1;
  std::string constraint = "uniform";
  std::size_t k = 0;
  std::string blocks, caps;
  std::string costs;
  double budget = 0;
  std::string rows, bounds;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a) {
  json params;
  params["kind"] = a.kind;
  params["n"] = a.n;
  params["seed"] = a.seed;
  if (a.kind == "cut") {
    params["edge_prob"] = a.edge_prob;
    params["weight_min"] = a.weight_min;
    params["weight_max"] = a.weight_max;
  } else if (a.kind == "tight") {
    params["epsilon"] = a.epsilon;
    params["u1"] = a.u1;
    params["u2"] = a.u2;
  }

  json constraint;
  constraint["kind"] = a.constraint;
  if (a.constraint == "uniform") {
    constraint["k"] = a.k > 0 ? a.k : std::max<std::size_t>(1, a.n / 2);
  } else if (a.constraint == "partition") {
    constraint["blocks"] = parse_id_rows(a.blocks);
    json caps = json::array();
    for (double c : parse_reals(a.caps)) caps.push_back(static_cast<std::size_t>(c));
    constraint["caps"] = caps;
  } else if (a.constraint == "knapsack") {
    constraint["costs"] =
        a.costs == "unit" ? std::vector<double>(a.n, 1.0) : parse_reals(a.costs);
    constraint["budget"] = a.budget;
  } else if (a.constraint == "packing") {
    constraint["A"] = parse_real_rows(a.rows);
    constraint["b"] = parse_reals(a.bounds);
  } else {
    std::cerr << "error: unknown constraint kind: " << a.constraint << "\n";
    return kExitUsage;
  }
  params["constraint"] = constraint;

  char* out = nullptr;
  const submax_status s = submax_generate(params.dump().c_str(), &out);
  if (s != SUBMAX_OK) return fail(s);
  const std::string text = take_string(out);
  if (a.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << a.out_path << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

struct RunArgs {
  std::string instance_path;
  std::string algo;
  double epsilon = 0.1;
  std::string tie_break = "lowest-id";
  std::uint64_t seed = 0;
  std::string usm = "double-greedy";
  bool timing = false;
};

json run_options(const RunArgs& a, const std::string& label, bool timing) {
  json opts;
  opts["algo"] = a.algo;
  opts["epsilon"] = a.epsilon;
  opts["tie_break"] = a.tie_break;
  opts["seed"] = a.seed;
  opts["usm"] = a.usm;
  opts["timing"] = timing;
  if (!label.empty()) opts["instance"] = label;
  return opts;
}

int load_instance(const std::string& path, submax_instance** out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  const submax_status s = submax_instance_from_json(text.c_str(), out);
  if (s != SUBMAX_OK) return fail(s);
  return 0;
}

int cmd_solve(const RunArgs& a) {
  submax_instance* inst = nullptr;
  if (int rc = load_instance(a.instance_path, &inst)) return rc;
  char* out = nullptr;
  const submax_status s =
      submax_solve(inst, run_options(a, "", a.timing).dump().c_str(), &out);
  submax_instance_free(inst);
  if (s != SUBMAX_OK) return fail(s);
  std::cout << take_string(out);
  return 0;
}

int cmd_exact(const std::string& path) {
  submax_instance* inst = nullptr;
  if (int rc = load_instance(path, &inst)) return rc;
  char* out = nullptr;
  const submax_status s = submax_exact(inst, &out);
  submax_instance_free(inst);
  if (s != SUBMAX_OK) return fail(s);
  std::cout << take_string(out);
  return 0;
}

int cmd_verify(const RunArgs& a) {
  submax_instance* inst = nullptr;
  if (int rc = load_instance(a.instance_path, &inst)) return rc;
  char* out = nullptr;
  const submax_status s =
      submax_verify(inst, run_options(a, "", false).dump().c_str(), &out);
  submax_instance_free(inst);
  if (s != SUBMAX_OK) return fail(s);
  const std::string text = take_string(out);
  std::cout << text;
  const json rec = json::parse(text);
  return rec.at("verdict").get<std::string>() == "fail" ? kExitVerifyFail : 0;
}

std::string csv_number(const json& rec, const char* key) {
  if (!rec.contains(key)) return "";
  return json(rec.at(key)).dump();
}

struct BenchTask {
  std::string path, label;
  std::string algo;
};

int cmd_bench(const std::string& dir, const std::vector<std::string>& algos,
              const RunArgs& base, const std::string& out_path) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  if (ec) {
    std::cerr << "error: cannot read corpus directory " << dir << "\n";
    return 1;
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchTask> tasks;
  for (const std::string& f : files)
    for (const std::string& algo : algos)
      tasks.push_back({f, fs::path(f).filename().string(), algo});

  std::size_t threads = 1;
  if (const char* env = std::getenv("SUBMAX_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) threads = static_cast<std::size_t>(parsed);
  }
  threads = std::min<std::size_t>(std::max<std::size_t>(threads, 1), tasks.size());

  std::vector<std::string> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || failed.load()) break;
      const BenchTask& task = tasks[t];

      submax_instance* inst = nullptr;
      std::string text;
      if (!read_file(task.path, text) ||
          submax_instance_from_json(text.c_str(), &inst) != SUBMAX_OK) {
        failed.store(true);
        std::cerr << "error: bad instance " << task.path << "\n";
        break;
      }

      RunArgs a = base;
      a.algo = task.algo;
      char* out = nullptr;
      const submax_status s =
          submax_solve(inst, run_options(a, task.label, true).dump().c_str(), &out);
      if (s == SUBMAX_ERR_MISMATCH) {
        // constraint kind not served by this algorithm: skip the pair
        submax_instance_free(inst);
        continue;
      }
      if (s != SUBMAX_OK) {
        failed.store(true);
        std::cerr << "error: " << task.label << " / " << task.algo << ": "
                  << submax_last_error() << "\n";
        submax_instance_free(inst);
        break;
      }
      json rec = json::parse(take_string(out));

      char* exact_out = nullptr;
      if (submax_exact(inst, &exact_out) == SUBMAX_OK) {
        const json ex = json::parse(take_string(exact_out));
        rec["opt_value"] = ex.at("opt_value");
        const double opt = ex.at("opt_value").get<double>();
        rec["ratio"] = opt > 0 ? rec.at("value").get<double>() / opt : 1.0;
      }
      submax_instance_free(inst);

      std::ostringstream row;
      row << task.label << ',' << task.algo << ',' << csv_number(rec, "epsilon")
          << ',' << rec.value("tie_break", "") << ',' << csv_number(rec, "seed")
          << ',' << csv_number(rec, "value") << ',' << csv_number(rec, "opt_value")
          << ',' << csv_number(rec, "ratio") << ',' << csv_number(rec, "queries")
          << ',' << csv_number(rec, "ms") << ','
          << (rec.at("feasible").get<bool>() ? "true" : "false") << '\n';
      rows[t] = row.str();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failed.load()) return 1;

  std::ostringstream csv;
  csv << "instance,algo,epsilon,tie_break,seed,value,opt_value,ratio,queries,ms,feasible\n";
  for (const std::string& row : rows) csv << row;

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << csv.str();
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic non-monotone submodular maximization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(submax_version()));

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a JSON instance");
  generate->add_option("--kind", gen.kind, "cut | table | tight")->required();
  generate->add_option("--n", gen.n, "ground set size")->required();
  generate->add_option("--seed", gen.seed);
  generate->add_option("--edge-prob", gen.edge_prob);
  generate->add_option("--weight-min", gen.weight_min);
  generate->add_option("--weight-max", gen.weight_max);
  generate->add_option("--epsilon", gen.epsilon);
  generate->add_option("--u1", gen.u1);
  generate->add_option("--u2", gen.u2);
  generate->add_option("--constraint", gen.constraint,
                       "uniform | partition | knapsack | packing");
  generate->add_option("--k", gen.k, "uniform matroid rank");
  generate->add_option("--blocks", gen.blocks, "partition blocks, e.g. 0,1;2,3");
  generate->add_option("--caps", gen.caps, "partition caps, e.g. 1,1");
  generate->add_option("--costs", gen.costs, "knapsack costs, or 'unit'");
  generate->add_option("--budget", gen.budget);
  generate->add_option("--A", gen.rows, "packing rows, e.g. 0.1,0.2;0.3,0.4");
  generate->add_option("--b", gen.bounds, "packing bounds, e.g. 1,2");
  generate->add_option("-o,--out", gen.out_path, "output file (default stdout)");

  RunArgs run;
  const auto add_run_flags = [&run](CLI::App* cmd, bool need_algo) {
    cmd->add_option("instance", run.instance_path, "instance JSON file")->required();
    auto* algo = cmd->add_option(
        "--algo", run.algo,
        "random-greedy | derand-greedy | twin | threshold-twin | enum-twin | "
        "enum-threshold-twin | multiplicative-updates | packing-main");
    if (need_algo) algo->required();
    cmd->add_option("--epsilon", run.epsilon);
    cmd->add_option("--tie-break", run.tie_break,
                    "lowest-id | alternate-solutions | highest-id");
    cmd->add_option("--seed", run.seed);
    cmd->add_option("--usm", run.usm, "double-greedy | exhaustive");
  };

  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm");
  add_run_flags(solve, true);
  solve->add_flag("--timing", run.timing, "include wall time in the record");

  CLI::App* exact = app.add_subcommand("exact", "Exhaustive optimum");
  std::string exact_path;
  exact->add_option("instance", exact_path, "instance JSON file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check the guarantee on one run");
  add_run_flags(verify, true);

  CLI::App* bench = app.add_subcommand("bench", "Sweep a corpus directory to CSV");
  std::string bench_dir, bench_out;
  std::vector<std::string> bench_algos;
  bench->add_option("corpus", bench_dir, "directory of instance JSON files")->required();
  bench->add_option("--algo", bench_algos, "algorithms to run")->required();
  bench->add_option("--epsilon", run.epsilon);
  bench->add_option("--tie-break", run.tie_break);
  bench->add_option("--seed", run.seed);
  bench->add_option("--usm", run.usm);
  bench->add_option("-o,--out", bench_out, "output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (solve->parsed()) return cmd_solve(run);
    if (exact->parsed()) return cmd_exact(exact_path);
    if (verify->parsed()) return cmd_verify(run);
    if (bench->parsed()) return cmd_bench(bench_dir, bench_algos, run, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
