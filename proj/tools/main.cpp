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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submod/barrier.hpp"
#include "submod/baselines.hpp"
#include "submod/experiment.hpp"
#include "submod/io.hpp"
#include "submod/verify.hpp"

namespace {

using namespace submod;

int env_threads() {
  const char* value = std::getenv("SUBMOD_THREADS");
  if (!value) return 1;
  const int threads = std::atoi(value);
  return threads > 0 ? threads : 1;
}

int cmd_run(const std::string& config_path) {
  ExperimentConfig config = parse_config_file(config_path);
  config.threads = env_threads();

  std::ofstream file_sink;
  std::ostream* sink = &std::cout;
  if (!config.output.empty()) {
    file_sink.open(config.output, std::ios::binary);
    if (!file_sink) {
      throw ConfigError("cannot write output " + config.output);
    }
    sink = &file_sink;
  }
  ExperimentResult result = run_experiment(config, sink);
  return result.any_failed ? 1 : 0;
}

struct SolveFlags {
  std::string algo = "barrier_greedy";
  double epsilon = 0.2;
  double lambda = 0.0;
  std::string instance_file;
  std::string graph_file;
  std::string features_file;
  std::string knapsack_file;
  std::string matroid_spec;
  std::string objective_kind = "facility";
  double alpha = 1.0;
  double sim_lambda = 1.0;
  int degree_q = 6;
  double mean_cost = 0.05;
  std::vector<double> budgets;
};

int cmd_solve(const SolveFlags& flags) {
  ExperimentConfig config;
  if (!flags.instance_file.empty()) {
    config.instance = "file:" + flags.instance_file;
  } else if (!flags.graph_file.empty()) {
    config.instance = "graph:" + flags.graph_file;
  } else if (!flags.features_file.empty()) {
    config.instance = "features:" + flags.features_file;
  } else {
    throw ConfigError("solve needs --instance, --graph or --features");
  }
  config.algorithms = {flags.algo};
  config.epsilon = flags.epsilon;
  config.lambda = flags.lambda;
  config.knapsack_file = flags.knapsack_file;
  config.matroid_spec = flags.matroid_spec;
  config.objective_kind = flags.objective_kind;
  config.alpha = flags.alpha;
  config.sim_lambda = flags.sim_lambda;
  config.degree_q = flags.degree_q;
  config.mean_cost = flags.mean_cost;
  if (!flags.budgets.empty()) config.base_budgets = flags.budgets;
  config.threads = env_threads();

  ExperimentResult result = run_experiment(config, &std::cout);
  return result.any_failed ? 1 : 0;
}

int cmd_verify(int max_n, int instances, std::uint64_t seed,
               const std::vector<std::string>& algos) {
  const InstanceFamily families[] = {
      InstanceFamily::kCoverage, InstanceFamily::kFacility,
      InstanceFamily::kLogDet, InstanceFamily::kConcaveModular};
  const std::pair<int, int> constraint_mix[] = {{1, 1}, {2, 1}, {2, 2}};

  int failures = 0;
  std::vector<double> worst_ratio(algos.size(), 1e300);
  for (int i = 0; i < instances; ++i) {
    const int n = 4 + static_cast<int>((seed + i) % (max_n - 3));
    const auto [k, ell] = constraint_mix[i % 3];
    auto inst =
        random_instance(seed + i, n, k, ell, families[i % 4]);
    auto opt = brute_force_opt(inst);
    for (std::size_t a = 0; a < algos.size(); ++a) {
      RunReport report;
      try {
        report = run_algorithm(algos[a], inst, 0.2, 0.0);
      } catch (const std::exception& e) {
        std::cout << "FAIL " << algos[a] << " seed=" << (seed + i)
                  << " error: " << e.what() << "\n";
        ++failures;
        continue;
      }
      const bool feasible = inst.feasible(report.set);
      const bool bounded = report.objective <= opt.opt_value + 1e-9;
      if (!feasible || !bounded) {
        std::cout << "FAIL " << algos[a] << " seed=" << (seed + i)
                  << (feasible ? "" : " infeasible-output")
                  << (bounded ? "" : " objective-above-optimum") << "\n";
        ++failures;
      }
      if (opt.opt_value > 0) {
        worst_ratio[a] =
            std::min(worst_ratio[a], report.objective / opt.opt_value);
      }
    }
  }
  for (std::size_t a = 0; a < algos.size(); ++a) {
    std::cout << algos[a] << ": " << instances << " instances, worst ratio "
              << (worst_ratio[a] > 1e299 ? 1.0 : worst_ratio[a]) << "\n";
  }
  std::cout << (failures == 0 ? "OK" : "FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_gen(std::uint64_t seed, const std::string& family, int n, int k,
            int ell, const std::string& out_path) {
  auto inst = random_instance(seed, n, k, ell, parse_family(family));
  if (out_path.empty() || out_path == "-") {
    std::cout << instance_to_string(inst);
  } else {
    save_instance(inst, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barrier local search for constrained submodular maximization"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment sweep from a config file");
  run->add_option("--config", config_path, "Config file (key = value lines)")
      ->required();

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Solve a single instance");
  solve->add_option("--algo", solve_flags.algo,
                    "barrier_greedy | barrier_greedy_pp | barrier_heuristic | "
                    "greedy | density_greedy | fast");
  solve->add_option("--epsilon", solve_flags.epsilon, "Guess-grid accuracy");
  solve->add_option("--lambda", solve_flags.lambda,
                    "Heuristic aggressiveness in [1,k] (0 = #knapsacks)");
  solve->add_option("--instance", solve_flags.instance_file,
                    "Instance file (submod-instance v1)");
  solve->add_option("--graph", solve_flags.graph_file,
                    "Edge-list file for a vertex-cover instance");
  solve->add_option("--features", solve_flags.features_file,
                    "Feature CSV for facility/log-det instances");
  solve->add_option("--knapsack", solve_flags.knapsack_file,
                    "Raw cost file, one knapsack per line");
  solve->add_option("--matroid", solve_flags.matroid_spec,
                    "e.g. uniform:m=15+partition:file=parts.csv,limits=6");
  solve->add_option("--objective", solve_flags.objective_kind,
                    "facility | logdet (features instances)");
  solve->add_option("--alpha", solve_flags.alpha, "log-det alpha");
  solve->add_option("--sim-lambda", solve_flags.sim_lambda,
                    "similarity decay rate");
  solve->add_option("--degree-q", solve_flags.degree_q,
                    "degree offset in the graph cost rule");
  solve->add_option("--mean-cost", solve_flags.mean_cost,
                    "target mean cost for graph instances");
  solve->add_option("--budget", solve_flags.budgets,
                    "knapsack budgets (single value broadcasts)")
      ->delimiter(',');

  int verify_max_n = 10;
  int verify_instances = 50;
  std::uint64_t verify_seed = 1;
  std::vector<std::string> verify_algos = {
      "barrier_greedy", "barrier_greedy_pp", "barrier_heuristic",
      "greedy",         "density_greedy",    "fast"};
  auto* verify =
      app.add_subcommand("verify", "Cross-check algorithms against brute force");
  verify->add_option("--max-n", verify_max_n, "Largest ground-set size (<=20)")
      ->check(CLI::Range(4, 20));
  verify->add_option("--instances", verify_instances, "Instance count");
  verify->add_option("--seed", verify_seed, "Base seed");
  verify->add_option("--algos", verify_algos, "Algorithms to check")
      ->delimiter(',');

  std::uint64_t gen_seed = 0;
  std::string gen_family = "coverage";
  int gen_n = 8;
  int gen_k = 1;
  int gen_ell = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a pseudo-random fixture");
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--family", gen_family,
                  "coverage | facility | logdet | concave-modular");
  gen->add_option("--n", gen_n, "Ground-set size");
  gen->add_option("--k", gen_k, "Partition matroid count");
  gen->add_option("--ell", gen_ell, "Knapsack count");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are config errors
  }

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (solve->parsed()) return cmd_solve(solve_flags);
    if (verify->parsed()) {
      return cmd_verify(verify_max_n, verify_instances, verify_seed,
                        verify_algos);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_seed, gen_family, gen_n, gen_k, gen_ell, gen_out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
