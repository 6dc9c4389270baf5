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

#include <cmath>
#include <vector>

#include "error.h"
#include "objectives.h"
#include "oracle.h"
#include "rng.h"
#include "unconstrained_max.h"
#include "validation.h"
#include "test_support.h"

namespace submax {
namespace {

using testing::F;
using testing::Modular;

TEST(UnconstrainedDrawsTest, Formula) {
  // ln 20 / ln(4/3) = 10.41...
  EXPECT_EQ(UnconstrainedDraws({.eps = 0.25, .delta = 0.05}), 11);
  // ln 10 / ln(4/3) = 8.004...
  EXPECT_EQ(UnconstrainedDraws({.eps = 0.25, .delta = 0.1}), 9);
  EXPECT_THROW(UnconstrainedDraws({.eps = 0.0}), Error);
  EXPECT_THROW(UnconstrainedDraws({.eps = 0.1, .delta = 1.0}), Error);
}

TEST(UnconstrainedMaxTest, SingletonGround) {
  const ModularObjective f = Modular({1, 5});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  Rng rng(4);
  double value = -1;
  const Subset out = UnconstrainedMax(oracle, Subset::Of(2, {0}), {}, rng, &value);
  EXPECT_EQ(out, Subset::Of(2, {0}));
  EXPECT_DOUBLE_EQ(value, 1.0);
}

TEST(UnconstrainedMaxTest, OneRoundOfDrawQueries) {
  const CoverageObjective f = testing::RandomCoverage(12, 30, 0.2, 1);
  const Subset ground = Subset::Of(12, {1, 3, 5, 7, 9});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryLedger ledger;
    Oracle oracle(f, ledger);
    Rng rng(seed);
    const UnconstrainedParams params{.eps = 0.2, .delta = 0.1};
    double value = 0;
    const Subset out = UnconstrainedMax(oracle, ground, params, rng, &value);
    EXPECT_TRUE(out.IsSubsetOf(ground));
    EXPECT_EQ(ledger.rounds(), 1);
    EXPECT_EQ(ledger.total_queries(), UnconstrainedDraws(params));
    EXPECT_DOUBLE_EQ(value, F(f, out));
  }
}

TEST(UnconstrainedMaxTest, EmptyHintCanWin) {
  const FunctionObjective f(4, "negative", [](const Subset& s) {
    return -1.0 - static_cast<double>(s.size());
  });
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  Rng rng(1);
  double value = 0;
  const Subset out = UnconstrainedMax(
      oracle, Subset::All(4), {.include_empty = true, .empty_value_hint = 0.0}, rng, &value);
  EXPECT_TRUE(out.empty());
  EXPECT_DOUBLE_EQ(value, 0.0);
}

TEST(UnconstrainedMaxTest, RejectsEmptyGround) {
  const ModularObjective f = Modular({1});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  Rng rng(1);
  EXPECT_THROW(UnconstrainedMax(oracle, Subset(1), {}, rng), Error);
}

TEST(UnconstrainedMaxTest, DrawsAreFairCoins) {
  const ModularObjective f(std::vector<double>(10, 0.0));
  Rng rng(8);
  std::vector<int> hits(10, 0);
  const int runs = 4000;
  for (int r = 0; r < runs; ++r) {
    QueryLedger ledger;
    Oracle oracle(f, ledger);
    // All values tie, so the first draw is returned.
    const Subset out = UnconstrainedMax(oracle, Subset::All(10), {}, rng);
    for (ElementId x : out.members()) ++hits[static_cast<std::size_t>(x)];
  }
  // Binomial(4000, 1/2): sd about 32.
  for (int h : hits) EXPECT_NEAR(h, runs / 2, 160);
}

TEST(UnconstrainedMaxTest, QuarterApproximationOnRevenue) {
  const auto f = MakeObjective(
      GenerateSynthetic(InstanceKind::kRevenue, {.n = 10, .p = 0.3}, 5));
  const double opt = BruteForceOpt(*f, f->n()).value;
  ASSERT_GT(opt, 0.0);
  const UnconstrainedParams params{.eps = 0.2, .delta = 0.1};
  const int runs = 500;
  int good = 0;
  Rng rng(77);
  for (int r = 0; r < runs; ++r) {
    QueryLedger ledger;
    Oracle oracle(*f, ledger);
    double value = 0;
    UnconstrainedMax(oracle, Subset::All(f->n()), params, rng, &value);
    if (value >= (0.25 - params.eps) * opt) ++good;
  }
  const double floor = (1 - params.delta) * runs - 3 * std::sqrt(runs * 0.1 * 0.9);
  EXPECT_GE(good, floor);
}

}  // namespace
}  // namespace submax
