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

// Reference algorithms for comparison runs.

#ifndef SUBMAX_BASELINES_H_
#define SUBMAX_BASELINES_H_

#include <vector>

#include "oracle.h"
#include "rng.h"

namespace submax {

// Output of one algorithm run. best_by_round[i] is the value of the
// algorithm's current solution once round i has completed.
struct AlgorithmRun {
  Subset solution;
  double value = 0.0;
  QueryLedger ledger;
  std::vector<double> best_by_round;
};

// Round 0 evaluates f(empty); every later round queries f(S + x) for all
// remaining x and adds the best element if its marginal is positive (ties:
// lowest id). Stops at |S| = k or when no marginal is positive.
AlgorithmRun Greedy(const Objective& f, int k, int parallelism = 1);

// Best prefix (length 0..k, ties: shortest) of a uniformly random
// permutation of the ground set. One round, k + 1 queries.
AlgorithmRun RandomPrefix(const Objective& f, int k, Rng& rng, int parallelism = 1);

struct LazyPick {
  Subset before;
  ElementId chosen = 0;
  std::vector<ElementId> candidates;
};

// Each step picks uniformly among the (up to) k elements with the largest
// positive marginals. Marginals are kept as upper bounds and refreshed in
// batches: the current top-k bounds that are stale are re-queried in one
// round until the top k are all fresh. If `picks` is set, every choice is
// recorded.
AlgorithmRun RandomLazyGreedy(const Objective& f, int k, Rng& rng,
                              std::vector<LazyPick>* picks = nullptr,
                              int parallelism = 1);

}  // namespace submax

#endif  // SUBMAX_BASELINES_H_
