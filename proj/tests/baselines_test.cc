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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "baselines.h"
#include "error.h"
#include "objectives.h"
#include "rng.h"
#include "validation.h"
#include "test_support.h"

namespace submax {
namespace {

using testing::F;
using testing::Modular;

TEST(GreedyTest, ModularTakesTopWeights) {
  const ModularObjective f = Modular({1, 2, 3});
  const AlgorithmRun run = Greedy(f, 2);
  EXPECT_EQ(run.solution, Subset::Of(3, {1, 2}));
  EXPECT_DOUBLE_EQ(run.value, 5.0);
  // f(empty) first, then one round per pick.
  EXPECT_EQ(run.ledger.rounds(), 3);
  EXPECT_EQ(run.ledger.total_queries(), 1 + 3 + 2);
  EXPECT_EQ(run.best_by_round, (std::vector<double>{0, 3, 5}));
}

TEST(GreedyTest, RevenueStopsOnNegativeMarginal) {
  const RevenueObjective f = testing::TwoNodeRevenue();
  const AlgorithmRun run = Greedy(f, 2);
  EXPECT_EQ(run.solution, Subset::Of(2, {0}));
  EXPECT_DOUBLE_EQ(run.value, 1.0);
  EXPECT_EQ(run.ledger.rounds(), 3);
}

TEST(GreedyTest, ZeroFunctionReturnsEmpty) {
  const FunctionObjective f(4, "zero", [](const Subset&) { return 0.0; });
  const AlgorithmRun run = Greedy(f, 3);
  EXPECT_TRUE(run.solution.empty());
  EXPECT_EQ(run.ledger.rounds(), 2);
}

TEST(GreedyTest, LedgerBounds) {
  for (int k : {1, 5, 15}) {
    const auto f = MakeObjective(
        GenerateSynthetic(InstanceKind::kSyntheticCut, {.n = 30, .p = 0.2}, 3));
    const AlgorithmRun run = Greedy(*f, k);
    const int n = f->n();
    EXPECT_LE(run.ledger.rounds(), k + 1);
    EXPECT_LE(run.ledger.total_queries(), static_cast<std::int64_t>(n) * k + n);
    const int picks = static_cast<int>(run.solution.size());
    EXPECT_EQ(run.ledger.rounds(), picks == k ? picks + 1 : picks + 2);
    EXPECT_TRUE(std::is_sorted(run.best_by_round.begin(), run.best_by_round.end()));
    EXPECT_EQ(run.best_by_round.size(), static_cast<std::size_t>(run.ledger.rounds()));
  }
  EXPECT_THROW(Greedy(Modular({1}), 0), Error);
}

TEST(RandomPrefixTest, FullLengthOnPositiveModular) {
  const ModularObjective f = Modular({1, 2, 3, 4});
  Rng rng(3);
  const AlgorithmRun run = RandomPrefix(f, 4, rng);
  EXPECT_EQ(run.solution, Subset::All(4));
  EXPECT_EQ(run.ledger.rounds(), 1);
  EXPECT_EQ(run.ledger.total_queries(), 5);
}

TEST(RandomPrefixTest, SingleStepChoosesBetterOfEmptyAndFirst) {
  const FunctionObjective f(3, "odd", [](const Subset& s) {
    return s.contains(1) ? -1.0 : static_cast<double>(s.size());
  });
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const AlgorithmRun run = RandomPrefix(f, 1, rng);
    EXPECT_LE(run.solution.size(), 1u);
    EXPECT_FALSE(run.solution.contains(1));
    EXPECT_EQ(run.ledger.total_queries(), 2);
  }
}

TEST(RandomPrefixTest, TwoNodeRevenueAlwaysFindsOne) {
  const RevenueObjective f = testing::TwoNodeRevenue();
  double sum = 0;
  const int runs = 10000;
  Rng rng(1);
  for (int i = 0; i < runs; ++i) sum += RandomPrefix(f, 2, rng).value;
  EXPECT_DOUBLE_EQ(sum / runs, 1.0);
}

TEST(RandomLazyGreedyTest, ModularTakesAll) {
  const ModularObjective f = Modular({1, 2, 3});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const AlgorithmRun run = RandomLazyGreedy(f, 3, rng);
    EXPECT_EQ(run.solution, Subset::All(3));
    EXPECT_DOUBLE_EQ(run.value, 6.0);
  }
}

TEST(RandomLazyGreedyTest, KOneMatchesGreedy) {
  for (InstanceKind kind : {InstanceKind::kImage, InstanceKind::kRevenue,
                            InstanceKind::kSyntheticCut}) {
    const auto f = MakeObjective(GenerateSynthetic(kind, {.n = 25, .p = 0.2, .dim = 5}, 8));
    Rng rng(2);
    const AlgorithmRun lazy = RandomLazyGreedy(*f, 1, rng);
    const AlgorithmRun greedy = Greedy(*f, 1);
    EXPECT_EQ(lazy.solution, greedy.solution) << InstanceKindName(kind);
  }
}

// Lazy bounds must never hide an element that belongs in the true top k.
TEST(RandomLazyGreedyTest, PicksAmongTrueTopMarginals) {
  for (InstanceKind kind : {InstanceKind::kImage, InstanceKind::kMovie, InstanceKind::kRevenue,
                            InstanceKind::kSyntheticCut}) {
    const auto f = MakeObjective(GenerateSynthetic(kind, {.n = 20, .p = 0.25, .dim = 4}, 5));
    for (int k : {2, 5}) {
      Rng rng(k);
      std::vector<LazyPick> picks;
      const AlgorithmRun run = RandomLazyGreedy(*f, k, rng, &picks);
      EXPECT_LE(run.solution.size(), static_cast<std::size_t>(k));
      EXPECT_NEAR(run.value, F(*f, run.solution), 1e-9);
      for (const LazyPick& pick : picks) {
        const double base = F(*f, pick.before);
        std::vector<double> marginals;
        for (ElementId x = 0; x < f->n(); ++x) {
          if (!pick.before.contains(x)) marginals.push_back(F(*f, pick.before.With(x)) - base);
        }
        std::sort(marginals.begin(), marginals.end(), std::greater<>());
        const double kth = marginals[std::min<std::size_t>(k, marginals.size()) - 1];
        const double chosen = F(*f, pick.before.With(pick.chosen)) - base;
        EXPECT_GT(chosen, 0.0);
        EXPECT_GE(chosen, kth - 1e-9) << InstanceKindName(kind) << " k " << k;
        EXPECT_NE(std::find(pick.candidates.begin(), pick.candidates.end(), pick.chosen),
                  pick.candidates.end());
        EXPECT_LE(pick.candidates.size(), static_cast<std::size_t>(k));
      }
    }
  }
}

TEST(RandomLazyGreedyTest, CoverageMeanNearOneOverE) {
  const CoverageObjective f = testing::RandomCoverage(10, 40, 0.15, 12);
  const int k = 4;
  const double opt = BruteForceOpt(f, k).value;
  double sum = 0;
  const int runs = 500;
  Rng rng(6);
  for (int i = 0; i < runs; ++i) sum += RandomLazyGreedy(f, k, rng).value;
  EXPECT_GE(sum / runs, (1 / std::exp(1.0) - 0.05) * opt);
}

}  // namespace
}  // namespace submax
