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

#include "nonmonotone_max.h"

#include <algorithm>
#include <cmath>

#include "error.h"
#include "unconstrained_max.h"

namespace submax {

NonmonotoneConstants DeriveNonmonotoneConstants(const NonmonotoneParams& params) {
  if (params.k < 1) Fail(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(params.eps > 0.0 && params.eps < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "eps must lie in (0, 1)");
  }
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  if (!(params.c1 > 0.0 && params.c1 < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "c1 must lie in (0, 1)");
  }
  if (!(params.c3 > 1.0)) Fail(ErrorCode::kInvalidArgument, "c3 must exceed 1");
  NonmonotoneConstants c;
  c.eps_hat = params.eps / 6.0;
  c.grid_max = static_cast<int>(
      std::ceil(2.0 * std::log(static_cast<double>(params.k)) / c.eps_hat));
  c.delta_hat = params.delta / (2.0 * (c.grid_max + 1));
  c.break_size = static_cast<int>(std::ceil(params.c3 * params.k));
  return c;
}

std::vector<double> ThresholdGrid(double max_singleton, const NonmonotoneParams& params) {
  const NonmonotoneConstants c = DeriveNonmonotoneConstants(params);
  std::vector<double> taus;
  taus.reserve(static_cast<std::size_t>(c.grid_max) + 1);
  for (int i = 0; i <= c.grid_max; ++i) {
    taus.push_back(params.c1 * std::pow(1.0 + c.eps_hat, i) * max_singleton / params.k);
  }
  return taus;
}

double MaxSingleton(Oracle& oracle) {
  std::vector<Subset> singletons;
  singletons.reserve(static_cast<std::size_t>(oracle.n()));
  for (ElementId x = 0; x < oracle.n(); ++x) singletons.push_back(Subset::Of(oracle.n(), {x}));
  const std::vector<double> values = oracle.EvaluateBatch(singletons);
  return *std::max_element(values.begin(), values.end());
}

Subset Downsample(const Subset& u, int k, Rng& rng) {
  if (k < 0) Fail(ErrorCode::kInvalidArgument, "k must be >= 0");
  if (u.size() <= static_cast<std::size_t>(k)) return u;
  return Subset::Of(u.ground_size(), rng.Sample(u.members(), static_cast<std::size_t>(k)));
}

PrefixChoice BestPrefix(Oracle& oracle, const Subset& u, Rng& rng,
                        std::optional<double> empty_value) {
  std::vector<ElementId> order(u.members().begin(), u.members().end());
  rng.Shuffle(std::span<ElementId>(order));
  std::vector<Subset> queries;
  if (!empty_value) queries.push_back(Subset(u.ground_size()));
  Subset prefix(u.ground_size());
  for (ElementId x : order) {
    prefix = prefix.With(x);
    queries.push_back(prefix);
  }
  if (queries.empty()) return {Subset(u.ground_size()), *empty_value};
  const std::vector<double> values = oracle.EvaluateBatch(queries);
  std::size_t offset = 0;
  PrefixChoice best{Subset(u.ground_size()), 0.0};
  if (empty_value) {
    best.value = *empty_value;
  } else {
    best.value = values[0];
    offset = 1;
  }
  for (std::size_t i = offset; i < queries.size(); ++i) {
    if (values[i] > best.value) best = {queries[i], values[i]};
  }
  return best;
}

NonmonotoneResult AdaptiveNonmonotoneMax(const Objective& f, const NonmonotoneParams& params,
                                         Rng& rng, const NonmonotoneOptions& options) {
  const NonmonotoneConstants c = DeriveNonmonotoneConstants(params);
  const int n = f.n();
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "ground set must be nonempty");
  NonmonotoneResult result;
  result.solution = Subset(n);
  Oracle main_oracle(f, result.ledger, options.parallelism);
  result.max_singleton = MaxSingleton(main_oracle);
  if (!(result.max_singleton > 0.0)) {
    result.best_by_round.assign(1, 0.0);
    return result;
  }
  if (options.traces != nullptr) {
    options.traces->assign(static_cast<std::size_t>(c.grid_max) + 1, {});
  }

  const std::vector<double> taus = ThresholdGrid(result.max_singleton, params);
  result.trials.reserve(taus.size());
  for (int i = 0; i <= c.grid_max; ++i) {
    Rng trial_rng = rng.Derive(static_cast<std::uint64_t>(i));
    ThresholdTrial trial;
    trial.index = i;
    trial.tau = taus[static_cast<std::size_t>(i)];

    ThresholdParams tp;
    tp.k = params.k;
    tp.tau = trial.tau;
    tp.eps = c.eps_hat;
    tp.delta = c.delta_hat;
    tp.break_size = c.break_size;
    tp.sample_override = params.sample_override;
    ThresholdOptions topts;
    topts.parallelism = options.parallelism;
    if (options.traces != nullptr) topts.trace = &(*options.traces)[static_cast<std::size_t>(i)];
    trial.outcome = ThresholdSampling(f, tp, trial_rng, topts);

    trial.ledger = trial.outcome.ledger;
    Oracle oracle(f, trial.ledger, options.parallelism);
    const Subset& s = trial.outcome.solution;
    PrefixChoice prefix{Subset(n), trial.outcome.empty_value};
    if (trial.outcome.reason == BreakReason::kSmallCandidates) {
      trial.solution_value = *trial.outcome.solution_value;
      const Subset& pool = trial.outcome.candidates;
      Subset u(n);
      if (!pool.empty()) {
        UnconstrainedParams up;
        up.eps = c.eps_hat;
        up.delta = c.delta_hat;
        u = UnconstrainedMax(oracle, pool, up, trial_rng);
      }
      Subset down = Downsample(u, params.k, trial_rng);
      prefix = BestPrefix(oracle, down, trial_rng, trial.outcome.empty_value);
      trial.unconstrained_set = std::move(u);
      trial.downsampled = std::move(down);
      trial.prefix_set = prefix.set;
    } else if (trial.outcome.solution_value) {
      trial.solution_value = *trial.outcome.solution_value;
    } else {
      trial.solution_value = oracle.EvaluateBatch(std::span<const Subset>(&s, 1))[0];
    }
    trial.prefix_value = prefix.value;
    if (prefix.value > trial.solution_value) {
      trial.best_local = prefix.set;
      trial.best_local_value = prefix.value;
    } else {
      trial.best_local = s;
      trial.best_local_value = trial.solution_value;
    }
    result.ledger.MergeParallel(trial.ledger, 1);
    result.trials.push_back(std::move(trial));
  }

  // R starts empty; f(empty) is known from every trial's first filter.
  result.value = result.trials.front().outcome.empty_value;
  for (const ThresholdTrial& trial : result.trials) {
    if (trial.solution_value > result.value) {
      result.solution = trial.outcome.solution;
      result.value = trial.solution_value;
    }
    if (trial.prefix_value > result.value) {
      result.solution = trial.prefix_set.value_or(Subset(n));
      result.value = trial.prefix_value;
    }
  }

  result.best_by_round.assign(static_cast<std::size_t>(result.ledger.rounds()), 0.0);
  for (const ThresholdTrial& trial : result.trials) {
    const std::size_t finished = static_cast<std::size_t>(trial.ledger.rounds());
    for (std::size_t j = 1; j < result.best_by_round.size(); ++j) {
      double& slot = result.best_by_round[j];
      slot = std::max(slot, trial.outcome.empty_value);
      if (j >= finished) slot = std::max(slot, trial.best_local_value);
    }
  }
  return result;
}

}  // namespace submax
