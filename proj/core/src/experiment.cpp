// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submod/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "submod/barrier.hpp"
#include "submod/baselines.hpp"
#include "submod/objectives.hpp"
#include "submod/verify.hpp"

namespace submod {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

double config_double(const std::string& value, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config: bad number for '" + key + "': " + value);
  }
  return v;
}

long long config_int(const std::string& value, const std::string& key) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config: bad integer for '" + key + "': " + value);
  }
  return v;
}

int integral_limit(double value, const std::string& what) {
  if (value < 0 || std::floor(value) != value) {
    throw ConfigError(what + " must be a non-negative integer, got " +
                      std::to_string(value));
  }
  return static_cast<int>(value);
}

KnapsackSet rescale_budgets(const KnapsackSet& base,
                            const std::vector<double>& budgets) {
  if (base.count() == 0) return base;
  if (budgets.size() != 1 && static_cast<int>(budgets.size()) != base.count()) {
    throw ConfigError("budget list has " + std::to_string(budgets.size()) +
                      " entries for " + std::to_string(base.count()) +
                      " knapsacks");
  }
  std::vector<std::vector<double>> raw;
  raw.reserve(base.count());
  std::vector<double> b;
  for (int i = 0; i < base.count(); ++i) {
    raw.push_back(base.costs(i));
    b.push_back(budgets.size() == 1 ? budgets[0]
                                    : budgets[static_cast<size_t>(i)]);
  }
  return normalize(raw, b);
}

std::vector<std::shared_ptr<const MatroidOracle>> override_matroids(
    const std::vector<std::shared_ptr<const MatroidOracle>>& matroids,
    const std::string& var, int limit) {
  std::vector<std::shared_ptr<const MatroidOracle>> out;
  bool touched = false;
  for (const auto& m : matroids) {
    if (var == "uniform_m") {
      if (auto* um = dynamic_cast<const UniformMatroid*>(m.get())) {
        out.push_back(std::make_shared<UniformMatroid>(um->ground(), limit));
        touched = true;
        continue;
      }
    } else if (var == "partition_m") {
      if (auto* pm = dynamic_cast<const PartitionMatroid*>(m.get())) {
        std::vector<int> limits(pm->limits().size(), limit);
        out.push_back(std::make_shared<PartitionMatroid>(pm->blocks(),
                                                         std::move(limits)));
        touched = true;
        continue;
      }
    }
    out.push_back(m);
  }
  if (!touched) {
    throw std::runtime_error("sweep variable " + var +
                             " matches no matroid in the instance");
  }
  return out;
}

ProblemInstance apply_sweep(const ProblemInstance& base,
                            const std::string& var, double value) {
  if (var == "budget") {
    return ProblemInstance(
        GroundSet(base.n()), base.objective_ptr(), base.matchoid(),
        rescale_budgets(base.knapsacks(), {value}));
  }
  auto matroids =
      override_matroids(base.matchoid().matroids(), var,
                        integral_limit(value, "sweep value for " + var));
  const int k = std::max(MatchoidConstraint::max_overlap(matroids),
                         base.matchoid().k());
  return ProblemInstance(GroundSet(base.n()), base.objective_ptr(),
                         MatchoidConstraint(std::move(matroids), k),
                         base.knapsacks());
}

std::vector<std::vector<double>> load_raw_costs(const std::string& path,
                                                int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != n) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": expected " + std::to_string(n) + " costs");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error(path + ": no cost vectors found");
  }
  return rows;
}

struct GenSpec {
  InstanceFamily family = InstanceFamily::kCoverage;
  int n = 0;
  int k = 1;
  int ell = 1;
};

GenSpec parse_gen_spec(const std::string& spec) {
  const auto parts = split_list(spec);
  if (parts.empty()) throw ConfigError("gen spec: missing family");
  GenSpec gs;
  try {
    gs.family = parse_family(parts[0]);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      throw ConfigError("gen spec: expected key=value, got '" + parts[i] +
                        "'");
    }
    const std::string key = parts[i].substr(0, eq);
    const long long value = config_int(parts[i].substr(eq + 1), key);
    if (key == "n") {
      gs.n = static_cast<int>(value);
    } else if (key == "k") {
      gs.k = static_cast<int>(value);
    } else if (key == "ell") {
      gs.ell = static_cast<int>(value);
    } else {
      throw ConfigError("gen spec: unknown key '" + key + "'");
    }
  }
  if (gs.n < 0 || gs.k < 0 || gs.ell < 0) {
    throw ConfigError("gen spec: n, k, ell must be non-negative");
  }
  return gs;
}

// Prepares whatever is shareable for an instance source, then builds one
// instance per (sweep value, seed).
class InstanceSource {
 public:
  InstanceSource(const ExperimentConfig& config) : config_(config) {
    const auto colon = config.instance.find(':');
    if (colon == std::string::npos) {
      throw ConfigError(
          "instance must be file:..., gen:..., graph:... or features:...");
    }
    kind_ = config.instance.substr(0, colon);
    payload_ = config.instance.substr(colon + 1);
    if (kind_ == "file") {
      base_ = std::make_shared<ProblemInstance>(load_instance(payload_));
    } else if (kind_ == "gen") {
      gen_ = parse_gen_spec(payload_);
    } else if (kind_ == "graph") {
      graph_ = std::make_shared<GraphData>(
          load_graph(payload_, config.degree_q, config.mean_cost));
      objective_ = std::make_shared<VertexCoverObjective>(graph_->adjacency,
                                                          graph_->weights);
      n_ = static_cast<int>(graph_->adjacency.size());
    } else if (kind_ == "features") {
      FeatureMatrix fm = load_features(payload_, config.sim_lambda);
      n_ = fm.n;
      if (config.objective_kind == "facility") {
        objective_ = std::make_shared<FacilityLocationObjective>(
            fm.n, std::move(fm.similarity));
      } else if (config.objective_kind == "logdet") {
        objective_ = std::make_shared<LogDetObjective>(
            fm.n, std::move(fm.similarity), config.alpha);
      } else {
        throw ConfigError("features objective must be facility or logdet");
      }
    } else {
      throw ConfigError("unknown instance source '" + kind_ + "'");
    }

    if ((kind_ == "graph" || kind_ == "features") &&
        !config.knapsack_file.empty()) {
      raw_costs_ = load_raw_costs(config.knapsack_file, n_);
    }
  }

  ProblemInstance build(double sweep_value, std::uint64_t seed) const {
    const bool budget_sweep = config_.sweep_var == "budget";
    if (kind_ == "file" || kind_ == "gen") {
      ProblemInstance base =
          kind_ == "file"
              ? ProblemInstance(*base_)
              : random_instance(seed, gen_.n, gen_.k, gen_.ell, gen_.family);
      // A budget sweep replaces the base budgets instead of compounding.
      KnapsackSet ks = base.knapsacks();
      if (!budget_sweep) ks = rescale_budgets(ks, config_.base_budgets);
      ProblemInstance scaled(GroundSet(base.n()), base.objective_ptr(),
                             base.matchoid(), std::move(ks));
      return apply_sweep(scaled, config_.sweep_var, sweep_value);
    }

    // graph / features: assemble matroids + knapsacks around the shared
    // objective.
    auto matroids = parse_matroid_spec(config_.matroid_spec, n_);
    const int k = MatchoidConstraint::max_overlap(matroids);
    std::vector<std::vector<double>> raw = raw_costs_;
    if (raw.empty() && kind_ == "graph") raw.push_back(graph_->raw_costs);
    std::vector<double> budgets =
        budget_sweep ? std::vector<double>{sweep_value} : config_.base_budgets;
    KnapsackSet ks = raw.empty()
                         ? KnapsackSet()
                         : rescale_budgets(KnapsackSet::from_normalized(raw),
                                           budgets);
    ProblemInstance inst(GroundSet(n_), objective_,
                         MatchoidConstraint(std::move(matroids), k),
                         std::move(ks));
    if (!budget_sweep) {
      return apply_sweep(inst, config_.sweep_var, sweep_value);
    }
    return inst;
  }

 private:
  const ExperimentConfig& config_;
  std::string kind_;
  std::string payload_;
  std::shared_ptr<const ProblemInstance> base_;
  GenSpec gen_;
  std::shared_ptr<const GraphData> graph_;
  std::shared_ptr<const SubmodularOracle> objective_;
  std::vector<std::vector<double>> raw_costs_;
  int n_ = 0;
};

void run_tasks(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<std::shared_ptr<const MatroidOracle>> parse_matroid_spec(
    const std::string& spec, int n) {
  std::vector<std::shared_ptr<const MatroidOracle>> matroids;
  if (trim(spec).empty()) return matroids;

  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  for (const auto& part : parts) {
    const auto colon = part.find(':');
    const std::string kind = trim(colon == std::string::npos
                                      ? part
                                      : part.substr(0, colon));
    std::map<std::string, std::string> options;
    if (colon != std::string::npos) {
      for (const auto& kv : split_list(part.substr(colon + 1))) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw ConfigError("matroid spec: expected key=value in '" + kv +
                            "'");
        }
        options[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
      }
    }
    if (kind == "uniform") {
      if (!options.count("m")) {
        throw ConfigError("matroid spec: uniform needs m=<limit>");
      }
      matroids.push_back(std::make_shared<UniformMatroid>(
          n, static_cast<int>(config_int(options.at("m"), "m"))));
    } else if (kind == "partition") {
      if (!options.count("file") || !options.count("limits")) {
        throw ConfigError(
            "matroid spec: partition needs file=<path>,limits=<int>");
      }
      std::ifstream in(options.at("file"));
      if (!in) {
        throw ConfigError("matroid spec: cannot open " + options.at("file"));
      }
      std::vector<int> blocks;
      std::string line;
      while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        blocks.push_back(
            static_cast<int>(config_int(t, "partition block id")));
      }
      if (static_cast<int>(blocks.size()) != n) {
        throw ConfigError("matroid spec: partition file has " +
                          std::to_string(blocks.size()) + " lines for n=" +
                          std::to_string(n));
      }
      int block_count = 0;
      for (int b : blocks) block_count = std::max(block_count, b + 1);
      const int limit =
          static_cast<int>(config_int(options.at("limits"), "limits"));
      matroids.push_back(std::make_shared<PartitionMatroid>(
          std::move(blocks), std::vector<int>(block_count, limit)));
    } else {
      throw ConfigError("matroid spec: unknown kind '" + kind + "'");
    }
  }
  return matroids;
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin) {
  ExperimentConfig config;
  bool have_algorithms = false;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_number) +
                        ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    if (key == "instance") {
      config.instance = value;
    } else if (key == "matroid") {
      config.matroid_spec = value;
    } else if (key == "knapsack") {
      config.knapsack_file = value;
    } else if (key == "objective") {
      config.objective_kind = value;
    } else if (key == "alpha") {
      config.alpha = config_double(value, key);
    } else if (key == "sim_lambda") {
      config.sim_lambda = config_double(value, key);
    } else if (key == "degree_q") {
      config.degree_q = static_cast<int>(config_int(value, key));
    } else if (key == "mean_cost") {
      config.mean_cost = config_double(value, key);
    } else if (key == "budget") {
      config.base_budgets.clear();
      for (const auto& tok : split_list(value)) {
        config.base_budgets.push_back(config_double(tok, key));
      }
    } else if (key == "algorithms") {
      config.algorithms = split_list(value);
      have_algorithms = true;
    } else if (key == "epsilon") {
      config.epsilon = config_double(value, key);
    } else if (key == "lambda") {
      config.lambda = config_double(value, key);
    } else if (key == "sweep") {
      config.sweep_var = value;
    } else if (key == "sweep_values") {
      config.sweep_values.clear();
      for (const auto& tok : split_list(value)) {
        config.sweep_values.push_back(config_double(tok, key));
      }
    } else if (key == "seeds") {
      config.seeds.clear();
      for (const auto& tok : split_list(value)) {
        config.seeds.push_back(
            static_cast<std::uint64_t>(config_int(tok, key)));
      }
    } else if (key == "output") {
      config.output = value;
    } else {
      throw ConfigError(origin + ":" + std::to_string(line_number) +
                        ": unknown key '" + key + "'");
    }
  }

  if (config.instance.empty()) throw ConfigError("config: missing instance");
  if (!have_algorithms || config.algorithms.empty()) {
    throw ConfigError("config: need at least one algorithm");
  }
  if (config.sweep_var != "budget" && config.sweep_var != "uniform_m" &&
      config.sweep_var != "partition_m") {
    throw ConfigError("config: sweep must be budget, uniform_m or partition_m");
  }
  if (config.sweep_values.empty()) {
    throw ConfigError("config: sweep_values is empty");
  }
  for (double v : config.sweep_values) {
    if (!(v > 0)) throw ConfigError("config: sweep values must be positive");
  }
  if (config.seeds.empty()) config.seeds = {0};
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

double default_lambda(const ProblemInstance& instance) {
  const int ell = instance.knapsacks().count();
  const int k = std::max(
      {MatchoidConstraint::max_overlap(instance.matchoid().matroids()), ell,
       1});
  return std::clamp(static_cast<double>(ell), 1.0, static_cast<double>(k));
}

RunReport run_algorithm(const std::string& name,
                        const ProblemInstance& instance, double epsilon,
                        double lambda, int threads) {
  BarrierOptions options;
  options.threads = threads;
  if (name == "barrier_greedy") {
    return barrier_greedy(instance, epsilon, options);
  }
  if (name == "barrier_greedy_pp") {
    return barrier_greedy_pp(instance, epsilon, options);
  }
  if (name == "barrier_heuristic") {
    return barrier_heuristic(instance, epsilon,
                             lambda > 0 ? lambda : default_lambda(instance),
                             options);
  }
  if (name == "greedy") return greedy(instance);
  if (name == "density_greedy") return density_greedy(instance);
  if (name == "fast") return fast_threshold(instance, epsilon);
  throw ConfigError("unknown algorithm: " + name);
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::ostream* sink) {
  for (const auto& name : config.algorithms) {
    if (name != "barrier_greedy" && name != "barrier_greedy_pp" &&
        name != "barrier_heuristic" && name != "greedy" &&
        name != "density_greedy" && name != "fast") {
      throw ConfigError("unknown algorithm: " + name);
    }
  }
  InstanceSource source(config);

  const int sweep_count = static_cast<int>(config.sweep_values.size());
  const int seed_count = static_cast<int>(config.seeds.size());
  const int task_count = sweep_count * seed_count;

  ExperimentResult result;
  std::vector<std::vector<ExperimentRow>> task_rows(task_count);
  std::vector<char> done(task_count, 0);
  std::mutex mu;
  int next_flush = 0;
  if (sink) *sink << csv_header() << "\n";

  auto run_task = [&](int index) {
    const double sweep_value = config.sweep_values[index / seed_count];
    const std::uint64_t seed = config.seeds[index % seed_count];

    std::vector<ExperimentRow> rows;
    for (const auto& algo : config.algorithms) {
      ExperimentRow row;
      row.algorithm = algo;
      row.sweep_var = config.sweep_var;
      row.sweep_value = sweep_value;
      row.seed = seed;
      try {
        ProblemInstance instance = source.build(sweep_value, seed);
        RunReport report =
            run_algorithm(algo, instance, config.epsilon, config.lambda);
        row.objective = report.objective;
        row.feasible = report.feasible;
        row.oracle_calls = report.oracle_calls;
        row.wall_ms = report.wall_ms;
        row.set = report.set;
      } catch (const std::exception&) {
        row.objective = std::numeric_limits<double>::quiet_NaN();
        row.feasible = false;
      }
      rows.push_back(std::move(row));
    }

    std::lock_guard<std::mutex> lock(mu);
    task_rows[index] = std::move(rows);
    done[index] = 1;
    while (next_flush < task_count && done[next_flush]) {
      for (auto& row : task_rows[next_flush]) {
        if (std::isnan(row.objective)) result.any_failed = true;
        if (sink) *sink << emit_row(row) << "\n";
        result.rows.push_back(std::move(row));
      }
      task_rows[next_flush].clear();
      ++next_flush;
    }
    if (sink) sink->flush();
  };

  run_tasks(task_count, config.threads, run_task);
  return result;
}

}  // namespace submod
