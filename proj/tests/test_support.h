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

#ifndef SUBMAX_TESTS_TEST_SUPPORT_H_
#define SUBMAX_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

#include "objectives.h"
#include "oracle.h"
#include "rng.h"

namespace submax::testing {

inline ModularObjective Modular(std::vector<double> weights) {
  return ModularObjective(std::move(weights));
}

// Cut function of the path 0-1-2 with unit weights.
inline CutObjective PathCut() {
  return CutObjective(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
}

// Revenue objective on two nodes joined by an edge of weight 1.
inline RevenueObjective TwoNodeRevenue() {
  return RevenueObjective(WeightedGraph(2, {{0, 1, 1.0}}));
}

inline SimilarityMatrix TwoByTwo() { return SimilarityMatrix(2, {1.0, 0.5, 0.5, 1.0}); }

inline double F(const Objective& f, std::initializer_list<ElementId> members) {
  return EvaluateOffLedger(f, Subset::Of(f.n(), members));
}

inline double F(const Objective& f, const Subset& s) { return EvaluateOffLedger(f, s); }

// Each element covers every universe item independently with probability p.
inline CoverageObjective RandomCoverage(int n, int universe, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  for (auto& items : covers) {
    for (int u = 0; u < universe; ++u) {
      if (rng.UniformOpenUnit() < p) items.push_back(u);
    }
  }
  return CoverageObjective(universe, std::move(covers));
}

inline Subset FromMask(int n, std::uint64_t mask) {
  std::vector<ElementId> members;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1) members.push_back(i);
  }
  return Subset::Of(n, members);
}

}  // namespace submax::testing

#endif  // SUBMAX_TESTS_TEST_SUPPORT_H_
