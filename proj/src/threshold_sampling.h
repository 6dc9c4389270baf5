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

// Threshold sampling: builds a solution in blocks whose average marginal
// gain stays near a threshold tau, filtering candidates that fall below it.
// Optionally stops early once fewer than `break_size` candidates survive a
// filter (the break variant used by the non-monotone driver).

#ifndef SUBMAX_THRESHOLD_SAMPLING_H_
#define SUBMAX_THRESHOLD_SAMPLING_H_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "oracle.h"
#include "rng.h"

namespace submax {

struct ThresholdParams {
  int k = 1;
  double tau = 0.0;
  double eps = 0.25;
  double delta = 0.05;
  // Stop after a filter that leaves fewer candidates than this.
  std::optional<int> break_size;
  // Fixed estimator sample count in place of the theoretical one.
  std::optional<std::int64_t> sample_override;
};

// Internal constants, all logarithms natural:
//   eps_hat   = eps / 3
//   rounds    = ceil(log(2n/delta) / log(1/(1 - eps_hat)))
//   scan_max  = ceil(log(k) / eps_hat)
//   delta_hat = delta / (2 * rounds * (scan_max + 1))
//   samples   = 16 * ceil(log(2/delta_hat) / eps_hat^2)
struct ThresholdConstants {
  double eps_hat = 0.0;
  int rounds = 0;
  int scan_max = 0;
  double delta_hat = 0.0;
  std::int64_t samples = 0;
};

// Throws kInvalidArgument on out-of-domain parameters.
ThresholdConstants DeriveThresholdConstants(int n, const ThresholdParams& params);

enum class BreakReason { kExhaustedRounds, kEmptyCandidates, kFullSolution, kSmallCandidates };

// "exhausted_rounds", "empty_A", "full_S", "small_A".
std::string_view BreakReasonName(BreakReason reason);

// Snapshot taken right after each filter.
struct ThresholdRoundRecord {
  int round = 0;
  Subset candidates;
  Subset solution;
  // Block size chosen by the scan; 0 when the round broke before scanning.
  int block_size = 0;
  // Last estimate of the scan; NaN when there was none.
  double mean = 0.0;
};

struct SamplingOutcome {
  Subset solution;
  Subset candidates;
  BreakReason reason = BreakReason::kExhaustedRounds;
  QueryLedger ledger;
  // f(solution), when the final filter round already paid for it.
  std::optional<double> solution_value;
  // f(empty set), paid for by the first filter.
  double empty_value = 0.0;
};

struct ThresholdOptions {
  int parallelism = 1;
  std::vector<ThresholdRoundRecord>* trace = nullptr;
};

// One D_t draw: T ~ U(A, t-1), x uniform from A \ T, returns
// [f(S + T + x) - f(S + T) >= tau]. One round, two queries.
bool SampleIndicator(Oracle& oracle, const Subset& solution, const Subset& candidates,
                     int t, double tau, Rng& rng);

// Mean of `samples` independent D_t draws, all issued in one round.
double EstimateMean(Oracle& oracle, const Subset& solution, const Subset& candidates,
                    int t, double tau, std::int64_t samples, Rng& rng);

SamplingOutcome ThresholdSampling(const Objective& f, const ThresholdParams& params,
                                  Rng& rng, const ThresholdOptions& options = {});

// Checks, off the run's ledger, that every x in N has Delta(x, S) < tau.
bool VerifyTerminationMarginals(const Objective& f, const SamplingOutcome& outcome,
                                double tau);

// One JSON object per record: the given integer tags first, then round,
// |A|, |S|, t and mu.
void WriteThresholdTrace(
    std::ostream& out, std::span<const ThresholdRoundRecord> records,
    std::initializer_list<std::pair<std::string_view, std::int64_t>> tags = {});

}  // namespace submax

#endif  // SUBMAX_THRESHOLD_SAMPLING_H_
