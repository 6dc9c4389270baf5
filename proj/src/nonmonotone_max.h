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

// Low-adaptivity maximization of a non-negative (possibly non-monotone)
// submodular function under |S| <= k.
//
// A geometric grid of thresholds tau_i = c1 (1 + eps_hat)^i max_x f(x) / k is
// tried in logical parallel. Each trial runs break-variant threshold
// sampling; when the candidate pool drops below ceil(c3 k), the survivors go
// through unconstrained maximization, are downsampled to k elements, and the
// best prefix of a random order is kept. The best of all trial solutions is
// returned.
//
// Adaptivity is the depth of the query-dependency chain: one round for the
// singleton scan plus the deepest trial. Queries add up across trials.

#ifndef SUBMAX_NONMONOTONE_MAX_H_
#define SUBMAX_NONMONOTONE_MAX_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "oracle.h"
#include "rng.h"
#include "threshold_sampling.h"

namespace submax {

struct NonmonotoneParams {
  int k = 1;
  double eps = 0.25;
  double delta = 0.05;
  double c1 = 1.0 / 7.0;
  double c3 = 3.0;
  std::optional<std::int64_t> sample_override;
};

// eps_hat = eps / 6, grid_max = ceil(2 log(k) / eps_hat),
// delta_hat = delta / (2 (grid_max + 1)), break_size = ceil(c3 k).
struct NonmonotoneConstants {
  double eps_hat = 0.0;
  int grid_max = 0;
  double delta_hat = 0.0;
  int break_size = 0;
};

NonmonotoneConstants DeriveNonmonotoneConstants(const NonmonotoneParams& params);

// tau_i for i = 0..grid_max.
std::vector<double> ThresholdGrid(double max_singleton, const NonmonotoneParams& params);

// max_x f({x}): one round, n queries.
double MaxSingleton(Oracle& oracle);

// U itself when |U| <= k, otherwise a uniform k-subset of U.
Subset Downsample(const Subset& u, int k, Rng& rng);

struct PrefixChoice {
  Subset set;
  double value = 0.0;
};

// Shuffles U and returns its best prefix (ties: shortest). All prefixes go
// out in one round; the empty prefix is queried only when `empty_value` is
// not already known.
PrefixChoice BestPrefix(Oracle& oracle, const Subset& u, Rng& rng,
                        std::optional<double> empty_value = std::nullopt);

struct ThresholdTrial {
  int index = 0;
  double tau = 0.0;
  SamplingOutcome outcome;
  double solution_value = 0.0;
  // Present only when the trial broke on a small candidate pool.
  std::optional<Subset> unconstrained_set;
  std::optional<Subset> downsampled;
  std::optional<Subset> prefix_set;
  double prefix_value = 0.0;
  Subset best_local;
  double best_local_value = 0.0;
  // Everything this trial queried, including post-processing.
  QueryLedger ledger;
};

struct NonmonotoneResult {
  Subset solution;
  double value = 0.0;
  double max_singleton = 0.0;
  QueryLedger ledger;
  std::vector<ThresholdTrial> trials;
  // Value of the answer assembled from the trials finished by each round.
  std::vector<double> best_by_round;
};

struct NonmonotoneOptions {
  int parallelism = 1;
  // When set, receives one threshold-sampling trace per trial.
  std::vector<std::vector<ThresholdRoundRecord>>* traces = nullptr;
};

NonmonotoneResult AdaptiveNonmonotoneMax(const Objective& f, const NonmonotoneParams& params,
                                         Rng& rng, const NonmonotoneOptions& options = {});

}  // namespace submax

#endif  // SUBMAX_NONMONOTONE_MAX_H_
