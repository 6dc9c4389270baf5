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

// Benchmark harness: algorithm x k x trial sweeps with per-round traces.
//
//   trace CSV:   algorithm,trial,round,cum_queries,best_value,k,seed
//   summary CSV: algorithm,k,mean_value,std_value,mean_queries,mean_rounds
//
// Lines starting with '#' are comments (an optional timestamp).

#ifndef SUBMAX_EXPERIMENT_H_
#define SUBMAX_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baselines.h"
#include "objectives.h"
#include "rng.h"

namespace submax {

enum class Algorithm { kAnm, kGreedy, kRandom, kRandomLazyGreedy };

// "anm", "greedy", "random", "rlg". Parse throws kUnknownName.
Algorithm ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);

// 0.01 for random lazy greedy, 0.25 otherwise.
double DefaultEps(Algorithm algorithm);

struct AlgorithmSettings {
  int k = 1;
  double eps = 0.25;
  double delta = 0.05;
  // Estimator sample count for ANM; nullopt means the theoretical count.
  std::optional<std::int64_t> samples = 100;
  int parallelism = 1;
};

// Runs one algorithm. For ANM, best_by_round follows the trials that have
// finished by each round. `debug_trace`, if set, receives threshold-sampling
// JSON lines (ANM only).
AlgorithmRun RunAlgorithm(const Objective& f, Algorithm algorithm,
                          const AlgorithmSettings& settings, Rng& rng,
                          std::ostream* debug_trace = nullptr);

struct TraceRow {
  std::string algorithm;
  int trial = 0;
  int round = 0;
  std::int64_t cum_queries = 0;
  double best_value = 0.0;
  int k = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct SummaryRow {
  std::string algorithm;
  int k = 0;
  double mean_value = 0.0;
  double std_value = 0.0;
  double mean_queries = 0.0;
  double mean_rounds = 0.0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct RunConfig {
  InstanceKind objective = InstanceKind::kSyntheticCut;
  std::optional<std::string> data_path;
  SyntheticSpec synthetic;
  std::optional<int> node_count;
  Algorithm algorithm = Algorithm::kAnm;
  std::vector<int> ks = {10};
  std::optional<double> eps;
  double delta = 0.05;
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> samples = 100;
  int parallelism = 1;
  std::optional<std::string> out_path;
  std::optional<std::string> trace_path;
  std::optional<std::string> debug_trace_path;
  bool timestamp = true;
};

struct ExperimentResult {
  std::vector<TraceRow> trace;
  std::vector<SummaryRow> summary;
};

// From data_path when given (similarity CSV or edge list, by kind), else a
// synthetic instance seeded with config.seed.
Instance LoadInstance(const RunConfig& config);

// Trial t uses Rng(config.seed + t). Throws kInvalidArgument when some k is
// outside [1, n] or trials < 1.
ExperimentResult RunExperiment(const RunConfig& config, const Instance& instance,
                               std::ostream* debug_trace = nullptr);

// Loads, runs and writes the CSV files named in the config.
ExperimentResult RunExperimentToFiles(const RunConfig& config);

void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows,
                   bool timestamp = false);
std::vector<TraceRow> ParseTraceCsv(std::istream& in);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows,
                     bool timestamp = false);
std::vector<SummaryRow> ParseSummaryCsv(std::istream& in);

}  // namespace submax

#endif  // SUBMAX_EXPERIMENT_H_
