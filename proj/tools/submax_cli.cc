// Copyright 2026 The Submax Authors.
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

// Command-line front end: experiment sweeps and acceptance suites. Talks to
// the library only through its C interface.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submax/submax.h"

namespace {

struct RunFlags {
  std::string objective = "synthetic-cut";
  std::optional<std::string> data;
  std::string synthetic;
  std::optional<int> nodes;
  std::optional<double> lambda;
  std::string algorithm = "anm";
  std::optional<int> k;
  std::vector<int> k_list;
  std::optional<double> eps;
  double delta = 0.05;
  int trials = 1;
  std::uint64_t seed = 0;
  std::int64_t samples = 100;
  int parallelism = 1;
  std::optional<std::string> out;
  std::optional<std::string> trace;
  std::optional<std::string> debug_trace;
  bool no_timestamp = false;
};

int ReportFailure(smx_status status) {
  std::cerr << "error (" << smx_status_name(status) << "): " << smx_last_error() << '\n';
  return 1;
}

const char* OrNull(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

int Run(const RunFlags& flags) {
  std::vector<int> ks = flags.k_list;
  if (flags.k) ks.insert(ks.begin(), *flags.k);
  if (ks.empty()) ks.push_back(10);

  if (flags.data) {
    smx_instance* instance = nullptr;
    const smx_status status = smx_instance_load(flags.objective.c_str(), flags.data->c_str(),
                                                flags.nodes.value_or(0),
                                                flags.lambda.value_or(-1.0), &instance);
    if (status != SMX_OK) return ReportFailure(status);
    if (smx_instance_has_negative_similarity(instance)) {
      std::cerr << "warning: similarity matrix has negative entries; the objective may "
                   "take negative values\n";
    }
    smx_instance_free(instance);
  }

  smx_experiment_config config;
  smx_experiment_config_init(&config);
  config.objective = flags.objective.c_str();
  config.data_path = OrNull(flags.data);
  config.synthetic = flags.synthetic.empty() ? nullptr : flags.synthetic.c_str();
  config.node_count = flags.nodes.value_or(0);
  config.lambda = flags.lambda.value_or(-1.0);
  config.algorithm = flags.algorithm.c_str();
  config.ks = ks.data();
  config.k_count = ks.size();
  config.eps = flags.eps.value_or(0.0);
  config.delta = flags.delta;
  config.trials = flags.trials;
  config.seed = flags.seed;
  config.samples = flags.samples;
  config.parallelism = flags.parallelism;
  config.out_path = flags.out ? flags.out->c_str() : "/dev/stdout";
  config.trace_path = OrNull(flags.trace);
  config.debug_trace_path = OrNull(flags.debug_trace);
  config.timestamp = flags.no_timestamp ? 0 : 1;
  const smx_status status = smx_run_experiment(&config);
  return status == SMX_OK ? 0 : ReportFailure(status);
}

void PrintLine(const char* line, void*) {
  std::cout << line << std::endl;
}

int Acceptance(const std::string& suite, std::uint64_t seed) {
  int all_passed = 0;
  const smx_status status = smx_run_acceptance(suite.c_str(), seed, PrintLine, nullptr,
                                               &all_passed);
  if (status != SMX_OK) return ReportFailure(status);
  std::cout << (all_passed ? "suite passed" : "suite FAILED") << std::endl;
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-adaptivity submodular maximization experiments"};
  app.require_subcommand(1);

  RunFlags flags;
  CLI::App* run = app.add_subcommand("run", "Run an algorithm sweep and write CSV traces");
  run->add_option("--objective", flags.objective, "image, movie, revenue or synthetic-cut")
      ->check(CLI::IsMember({"image", "movie", "revenue", "synthetic-cut"}));
  run->add_option("--data", flags.data, "Similarity CSV or edge list")->check(CLI::ExistingFile);
  run->add_option("--synthetic", flags.synthetic, "Synthetic spec, e.g. \"n=50,p=0.1\"");
  run->add_option("--nodes", flags.nodes, "Node count for edge lists");
  run->add_option("--lambda", flags.lambda, "Movie diversity weight");
  run->add_option("--algorithm", flags.algorithm, "anm, greedy, random or rlg")
      ->check(CLI::IsMember({"anm", "greedy", "random", "rlg"}));
  auto* k = run->add_option("--k", flags.k, "Cardinality constraint");
  run->add_option("--k-list", flags.k_list, "Comma-separated list of k")
      ->delimiter(',')
      ->excludes(k);
  run->add_option("--eps", flags.eps, "Accuracy parameter (default 0.25, rlg 0.01)");
  run->add_option("--delta", flags.delta, "Failure probability")->capture_default_str();
  run->add_option("--trials", flags.trials, "Trials per k")->capture_default_str();
  run->add_option("--seed", flags.seed, "Base seed; trial t uses seed + t")
      ->capture_default_str();
  run->add_option("--samples", flags.samples, "Estimator samples; 0 for the theoretical count")
      ->capture_default_str();
  run->add_option("--parallelism", flags.parallelism, "Threads per query batch")
      ->capture_default_str();
  run->add_option("--out", flags.out, "Summary CSV path (default: stdout)");
  run->add_option("--trace", flags.trace, "Per-round trace CSV path");
  run->add_option("--debug-trace", flags.debug_trace, "Threshold-sampling JSON lines path");
  run->add_flag("--no-timestamp", flags.no_timestamp, "Omit the timestamp comment line");

  std::string suite = "all";
  std::uint64_t seed = 1;
  CLI::App* acceptance = app.add_subcommand("acceptance", "Run an acceptance suite");
  acceptance
      ->add_option("--suite", suite,
                   "threshold, average-marginal, inclusion, unconstrained, downsampling, "
                   "approximation, gap, ledgers, baselines, submodularity or all")
      ->capture_default_str();
  acceptance->add_option("--seed", seed, "Seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  if (run->parsed()) return Run(flags);
  return Acceptance(suite, seed);
}
