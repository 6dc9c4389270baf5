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

#include "threshold_sampling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "error.h"
#include "json.hpp"

namespace submax {
namespace {

// Queries issued per chunk when streaming an estimation round. Even, so both
// queries of a sample land in the same chunk.
constexpr std::size_t kStreamChunk = 2048;

void CheckBlockSize(int t, const Subset& candidates) {
  if (t < 1 || static_cast<std::size_t>(t) > candidates.size()) {
    Fail(ErrorCode::kInvalidArgument, "D_t needs 1 <= t <= |A|");
  }
}

}  // namespace

ThresholdConstants DeriveThresholdConstants(int n, const ThresholdParams& params) {
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "ground set must be nonempty");
  if (params.k < 1) Fail(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(params.tau >= 0.0) || !std::isfinite(params.tau)) {
    Fail(ErrorCode::kInvalidArgument, "tau must be finite and >= 0");
  }
  if (!(params.eps > 0.0 && params.eps < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "eps must lie in (0, 1)");
  }
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  if (params.break_size && *params.break_size < 1) {
    Fail(ErrorCode::kInvalidArgument, "break size must be >= 1");
  }
  if (params.sample_override && *params.sample_override < 1) {
    Fail(ErrorCode::kInvalidArgument, "sample override must be >= 1");
  }
  ThresholdConstants c;
  c.eps_hat = params.eps / 3.0;
  c.rounds = static_cast<int>(
      std::ceil(std::log(2.0 * n / params.delta) / -std::log1p(-c.eps_hat)));
  c.scan_max = static_cast<int>(std::ceil(std::log(static_cast<double>(params.k)) / c.eps_hat));
  c.delta_hat = params.delta / (2.0 * c.rounds * (c.scan_max + 1));
  c.samples = params.sample_override.value_or(
      16 * static_cast<std::int64_t>(
               std::ceil(std::log(2.0 / c.delta_hat) / (c.eps_hat * c.eps_hat))));
  return c;
}

std::string_view BreakReasonName(BreakReason reason) {
  switch (reason) {
    case BreakReason::kExhaustedRounds:
      return "exhausted_rounds";
    case BreakReason::kEmptyCandidates:
      return "empty_A";
    case BreakReason::kFullSolution:
      return "full_S";
    case BreakReason::kSmallCandidates:
      return "small_A";
  }
  return "?";
}

bool SampleIndicator(Oracle& oracle, const Subset& solution, const Subset& candidates,
                     int t, double tau, Rng& rng) {
  return EstimateMean(oracle, solution, candidates, t, tau, 1, rng) == 1.0;
}

double EstimateMean(Oracle& oracle, const Subset& solution, const Subset& candidates,
                    int t, double tau, std::int64_t samples, Rng& rng) {
  CheckBlockSize(t, candidates);
  if (samples < 1) Fail(ErrorCode::kInvalidArgument, "need at least one sample");
  // Query 2j is S + T and query 2j+1 is S + T + x, where a partial
  // Fisher-Yates pass over `pool` puts a uniform t-subset in uniform order
  // at its front: the first t-1 entries form T and the t-th is x.
  std::vector<ElementId> pool(candidates.members().begin(), candidates.members().end());
  const auto block = static_cast<std::size_t>(t) - 1;
  const Subset* with_block = nullptr;
  double with_block_value = 0.0;
  std::int64_t hits = 0;
  oracle.EvaluateStreaming(
      2 * static_cast<std::size_t>(samples), kStreamChunk,
      [&](std::size_t i, Subset& slot) {
        if (i % 2 == 1) {
          slot.AssignWith(*with_block, pool[block]);
          return;
        }
        for (std::size_t a = 0; a <= block; ++a) {
          const std::size_t b = a + rng.UniformBelow(pool.size() - a);
          std::swap(pool[a], pool[b]);
        }
        slot.AssignUnion(solution, std::span<const ElementId>(pool).first(block));
        with_block = &slot;
      },
      [&](std::size_t i, double value) {
        if (i % 2 == 0) {
          with_block_value = value;
        } else if (value - with_block_value >= tau) {
          ++hits;
        }
      });
  oracle.ledger().RecordSamples(samples);
  return static_cast<double>(hits) / static_cast<double>(samples);
}

SamplingOutcome ThresholdSampling(const Objective& f, const ThresholdParams& params,
                                  Rng& rng, const ThresholdOptions& options) {
  const int n = f.n();
  const ThresholdConstants c = DeriveThresholdConstants(n, params);
  SamplingOutcome out;
  Oracle oracle(f, out.ledger, options.parallelism);
  out.solution = Subset(n);
  out.candidates = Subset::All(n);

  for (int round = 0; round < c.rounds; ++round) {
    const MarginalBatch filter =
        oracle.BatchMarginalsWithBase(out.solution, out.candidates.members());
    if (round == 0) out.empty_value = filter.base_value;
    out.solution_value = filter.base_value;
    std::vector<ElementId> kept;
    for (std::size_t i = 0; i < filter.marginals.size(); ++i) {
      if (filter.marginals[i] >= params.tau) kept.push_back(out.candidates.members()[i]);
    }
    out.candidates = Subset::Of(n, kept);

    ThresholdRoundRecord* record = nullptr;
    if (options.trace != nullptr) {
      options.trace->push_back({round, out.candidates, out.solution, 0,
                                std::numeric_limits<double>::quiet_NaN()});
      record = &options.trace->back();
    }

    const int pool = static_cast<int>(out.candidates.size());
    if (params.break_size && pool < *params.break_size) {
      out.reason = BreakReason::kSmallCandidates;
      return out;
    }
    if (pool == 0) {
      out.reason = BreakReason::kEmptyCandidates;
      return out;
    }

    int t = 1;
    for (int i = 0; i <= c.scan_max; ++i) {
      const double grown = std::floor(std::pow(1.0 + c.eps_hat, i));
      t = grown >= pool ? pool : static_cast<int>(grown);
      const double mean = EstimateMean(oracle, out.solution, out.candidates, t, params.tau,
                                       c.samples, rng);
      if (record != nullptr) {
        record->block_size = t;
        record->mean = mean;
      }
      if (mean <= 1.0 - 1.5 * c.eps_hat) break;
    }

    const int room = params.k - static_cast<int>(out.solution.size());
    const std::vector<ElementId> block =
        rng.Sample(out.candidates.members(), static_cast<std::size_t>(std::min(t, room)));
    out.solution = out.solution.Union(block);
    out.solution_value.reset();
    if (static_cast<int>(out.solution.size()) == params.k) {
      out.reason = BreakReason::kFullSolution;
      return out;
    }
  }
  out.reason = BreakReason::kExhaustedRounds;
  return out;
}

bool VerifyTerminationMarginals(const Objective& f, const SamplingOutcome& outcome,
                                double tau) {
  QueryLedger scratch;
  Oracle oracle(f, scratch);
  const Subset everything = Subset::All(f.n());
  const MarginalBatch batch =
      oracle.BatchMarginalsWithBase(outcome.solution, everything.members());
  return std::all_of(batch.marginals.begin(), batch.marginals.end(),
                     [tau](double m) { return m < tau; });
}

void WriteThresholdTrace(
    std::ostream& out, std::span<const ThresholdRoundRecord> records,
    std::initializer_list<std::pair<std::string_view, std::int64_t>> tags) {
  for (const ThresholdRoundRecord& r : records) {
    nlohmann::ordered_json line;
    for (const auto& [key, value] : tags) line[std::string(key)] = value;
    line["round"] = r.round;
    line["A"] = r.candidates.size();
    line["S"] = r.solution.size();
    line["t"] = r.block_size;
    line["mu"] = std::isnan(r.mean) ? nlohmann::ordered_json(nullptr)
                                    : nlohmann::ordered_json(r.mean);
    out << line.dump() << '\n';
  }
}

}  // namespace submax
