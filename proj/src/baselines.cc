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

#include "baselines.h"

#include <algorithm>
#include <set>
#include <utility>

#include "error.h"

namespace submax {
namespace {

void CheckK(int k) {
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "k must be >= 1");
}

}  // namespace

AlgorithmRun Greedy(const Objective& f, int k, int parallelism) {
  CheckK(k);
  const int n = f.n();
  AlgorithmRun run;
  Oracle oracle(f, run.ledger, parallelism);
  run.solution = Subset(n);
  run.value = oracle.EvaluateBatch(std::span<const Subset>(&run.solution, 1))[0];
  run.best_by_round.push_back(run.value);

  std::vector<ElementId> remaining(static_cast<std::size_t>(n));
  for (ElementId x = 0; x < n; ++x) remaining[static_cast<std::size_t>(x)] = x;
  while (static_cast<int>(run.solution.size()) < k && !remaining.empty()) {
    std::vector<Subset> queries;
    queries.reserve(remaining.size());
    for (ElementId x : remaining) queries.push_back(run.solution.With(x));
    const std::vector<double> values = oracle.EvaluateBatch(queries);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] > values[best]) best = i;
    }
    if (!(values[best] - run.value > 0.0)) {
      run.best_by_round.push_back(run.value);
      break;
    }
    run.solution = std::move(queries[best]);
    run.value = values[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    run.best_by_round.push_back(run.value);
  }
  return run;
}

AlgorithmRun RandomPrefix(const Objective& f, int k, Rng& rng, int parallelism) {
  CheckK(k);
  const int n = f.n();
  AlgorithmRun run;
  Oracle oracle(f, run.ledger, parallelism);
  std::vector<ElementId> order(static_cast<std::size_t>(n));
  for (ElementId x = 0; x < n; ++x) order[static_cast<std::size_t>(x)] = x;
  rng.Shuffle(std::span<ElementId>(order));
  std::vector<Subset> prefixes;
  prefixes.push_back(Subset(n));
  for (int i = 0; i < std::min(k, n); ++i) {
    prefixes.push_back(prefixes.back().With(order[static_cast<std::size_t>(i)]));
  }
  const std::vector<double> values = oracle.EvaluateBatch(prefixes);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  run.solution = std::move(prefixes[best]);
  run.value = values[best];
  run.best_by_round.push_back(run.value);
  return run;
}

AlgorithmRun RandomLazyGreedy(const Objective& f, int k, Rng& rng,
                              std::vector<LazyPick>* picks, int parallelism) {
  CheckK(k);
  const int n = f.n();
  AlgorithmRun run;
  Oracle oracle(f, run.ledger, parallelism);
  run.solution = Subset(n);

  // Upper bounds on current marginals, ordered by (bound desc, id asc).
  std::set<std::pair<double, ElementId>> queue;
  std::vector<double> bound(static_cast<std::size_t>(n));
  std::vector<double> raw(static_cast<std::size_t>(n));
  std::vector<int> fresh_at(static_cast<std::size_t>(n), 0);
  int version = 0;

  {
    std::vector<ElementId> all(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    const MarginalBatch first = oracle.BatchMarginalsWithBase(run.solution, all);
    run.value = first.base_value;
    for (ElementId x = 0; x < n; ++x) {
      const auto i = static_cast<std::size_t>(x);
      bound[i] = first.marginals[i];
      raw[i] = first.marginals[i] + first.base_value;
      queue.insert({-bound[i], x});
    }
    run.best_by_round.push_back(run.value);
  }

  while (static_cast<int>(run.solution.size()) < k && !queue.empty()) {
    std::vector<ElementId> top;
    while (true) {
      top.clear();
      std::vector<ElementId> stale;
      for (auto it = queue.begin(); it != queue.end() && static_cast<int>(top.size()) < k;
           ++it) {
        top.push_back(it->second);
        if (fresh_at[static_cast<std::size_t>(it->second)] != version) {
          stale.push_back(it->second);
        }
      }
      if (stale.empty()) break;
      std::vector<Subset> queries;
      queries.reserve(stale.size());
      for (ElementId x : stale) queries.push_back(run.solution.With(x));
      const std::vector<double> values = oracle.EvaluateBatch(queries);
      for (std::size_t j = 0; j < stale.size(); ++j) {
        const auto i = static_cast<std::size_t>(stale[j]);
        queue.erase({-bound[i], stale[j]});
        raw[i] = values[j];
        bound[i] = values[j] - run.value;
        fresh_at[i] = version;
        queue.insert({-bound[i], stale[j]});
      }
      run.best_by_round.push_back(run.value);
    }

    std::vector<ElementId> positive;
    for (ElementId x : top) {
      if (bound[static_cast<std::size_t>(x)] > 0.0) positive.push_back(x);
    }
    if (positive.empty()) break;
    const ElementId chosen = positive[rng.UniformBelow(positive.size())];
    if (picks != nullptr) picks->push_back({run.solution, chosen, positive});
    const auto ci = static_cast<std::size_t>(chosen);
    queue.erase({-bound[ci], chosen});
    run.solution = run.solution.With(chosen);
    run.value = raw[ci];
    run.best_by_round.back() = run.value;
    ++version;
  }
  return run;
}

}  // namespace submax
