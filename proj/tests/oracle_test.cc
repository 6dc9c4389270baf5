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
#include <cstdint>
#include <vector>

#include "error.h"
#include "objectives.h"
#include "oracle.h"
#include "rng.h"
#include "test_support.h"

namespace submax {
namespace {

using testing::F;
using testing::Modular;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(SubsetTest, OfSortsMembers) {
  const Subset s = Subset::Of(5, {3, 0, 4});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(std::vector<ElementId>(s.members().begin(), s.members().end()),
            (std::vector<ElementId>{0, 3, 4}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_FALSE(s.contains(5));
}

TEST(SubsetTest, RejectsDuplicatesAndOutOfRange) {
  EXPECT_EQ(CodeOf([] { Subset::Of(4, {1, 1}); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(CodeOf([] { Subset::Of(4, {4}); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(CodeOf([] { Subset::Of(4, {-1}); }), ErrorCode::kInvalidSubset);
}

TEST(SubsetTest, SetAlgebra) {
  const Subset a = Subset::Of(6, {0, 2, 4});
  const Subset b = Subset::Of(6, {1, 2});
  EXPECT_EQ(a.Union(b), Subset::Of(6, {0, 1, 2, 4}));
  EXPECT_EQ(a.Minus(b), Subset::Of(6, {0, 4}));
  EXPECT_EQ(a.Intersect(b), Subset::Of(6, {2}));
  EXPECT_EQ(a.With(5), Subset::Of(6, {0, 2, 4, 5}));
  EXPECT_EQ(a.With(2), a);
  EXPECT_TRUE(Subset::Of(6, {2}).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_EQ(Subset::All(3), Subset::Of(3, {0, 1, 2}));
  EXPECT_TRUE(Subset(3).empty());
}

TEST(SubsetTest, LargeGroundSetMembership) {
  const Subset s = Subset::Of(200, {0, 63, 64, 130, 199});
  for (int x = 0; x < 200; ++x) {
    const bool expected = x == 0 || x == 63 || x == 64 || x == 130 || x == 199;
    EXPECT_EQ(s.contains(x), expected) << x;
  }
  EXPECT_TRUE(s.With(100).contains(100));
  EXPECT_FALSE(s.Minus(Subset::Of(200, {130})).contains(130));
}

TEST(SubsetTest, InPlaceFormsMatchCopyingForms) {
  Rng rng(3);
  for (int n : {5, 64, 65, 150}) {
    Subset slot;
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<ElementId> base_ids;
      for (int x = 0; x < n; ++x) {
        if (rng.Coin()) base_ids.push_back(x);
      }
      const Subset base = Subset::Of(n, base_ids);
      std::vector<ElementId> extra;
      const int extras = static_cast<int>(rng.UniformBelow(8));
      for (int i = 0; i < extras; ++i) {
        extra.push_back(static_cast<ElementId>(rng.UniformBelow(n)));
      }
      slot.AssignUnion(base, extra);
      EXPECT_EQ(slot, base.Union(extra));
      for (int x = 0; x < n; ++x) EXPECT_EQ(slot.contains(x), base.Union(extra).contains(x));
      const ElementId x = static_cast<ElementId>(rng.UniformBelow(n));
      slot.AssignWith(base, x);
      EXPECT_EQ(slot, base.With(x));
    }
  }
}

TEST(OracleTest, ModularBatch) {
  const ModularObjective f = Modular({1, 2, 3});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<Subset> queries = {Subset::Of(3, {0}), Subset::Of(3, {0, 1}), Subset(3)};
  EXPECT_EQ(oracle.EvaluateBatch(queries), (std::vector<double>{1, 3, 0}));
  EXPECT_EQ(ledger.rounds(), 1);
  EXPECT_EQ(ledger.total_queries(), 3);
}

TEST(OracleTest, EmptySetQueryCostsOne) {
  const ModularObjective f = Modular({1, 2, 3});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<Subset> queries = {Subset(3)};
  EXPECT_EQ(oracle.EvaluateBatch(queries), (std::vector<double>{0}));
  EXPECT_EQ(ledger.rounds(), 1);
  EXPECT_EQ(ledger.total_queries(), 1);
}

TEST(OracleTest, PathCutCountsBothEdges) {
  const CutObjective f = testing::PathCut();
  EXPECT_DOUBLE_EQ(F(f, {1}), 2.0);
  EXPECT_DOUBLE_EQ(F(f, {0}), 1.0);
  EXPECT_DOUBLE_EQ(F(f, {0, 2}), 2.0);
  EXPECT_DOUBLE_EQ(F(f, {0, 1, 2}), 0.0);
}

TEST(OracleTest, BatchMarginals) {
  const ModularObjective f = Modular({1, 2, 3});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<ElementId> all = {0, 1, 2};
  EXPECT_EQ(oracle.BatchMarginals(Subset(3), all, 0.0), (std::vector<double>{1, 2, 3}));
  const std::vector<ElementId> zero = {0};
  EXPECT_EQ(oracle.BatchMarginals(Subset::Of(3, {0}), zero, 1.0), (std::vector<double>{0}));
  EXPECT_EQ(ledger.rounds(), 2);
  EXPECT_EQ(ledger.total_queries(), 4);
}

TEST(OracleTest, RevenueMarginalFromEmpty) {
  const RevenueObjective f = testing::TwoNodeRevenue();
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<ElementId> cand = {0};
  EXPECT_EQ(oracle.BatchMarginals(Subset(2), cand, 0.0), (std::vector<double>{1.0}));
}

TEST(OracleTest, MarginalsWithBaseShareOneRound) {
  const ModularObjective f = Modular({1, 2, 3});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<ElementId> cand = {1, 2};
  const MarginalBatch batch = oracle.BatchMarginalsWithBase(Subset::Of(3, {0}), cand);
  EXPECT_DOUBLE_EQ(batch.base_value, 1.0);
  EXPECT_EQ(batch.marginals, (std::vector<double>{2, 3}));
  EXPECT_EQ(ledger.rounds(), 1);
  EXPECT_EQ(ledger.total_queries(), 3);
}

TEST(OracleTest, RejectsMismatchedGroundSet) {
  const ModularObjective f = Modular({1, 2, 3});
  QueryLedger ledger;
  Oracle oracle(f, ledger);
  const std::vector<Subset> queries = {Subset::Of(4, {3})};
  EXPECT_EQ(CodeOf([&] { oracle.EvaluateBatch(queries); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(ledger.rounds(), 0);
}

TEST(OracleTest, ParallelismDoesNotChangeResults) {
  const CoverageObjective f = testing::RandomCoverage(40, 80, 0.1, 5);
  Rng rng(9);
  std::vector<Subset> queries;
  for (int i = 0; i < 500; ++i) {
    std::vector<ElementId> ids;
    for (int x = 0; x < 40; ++x) {
      if (rng.Coin()) ids.push_back(x);
    }
    queries.push_back(Subset::Of(40, ids));
  }
  QueryLedger serial_ledger;
  QueryLedger parallel_ledger;
  Oracle serial(f, serial_ledger, 1);
  Oracle parallel(f, parallel_ledger, 4);
  EXPECT_EQ(serial.EvaluateBatch(queries), parallel.EvaluateBatch(queries));
  EXPECT_EQ(serial_ledger.per_round().size(), parallel_ledger.per_round().size());
  EXPECT_EQ(serial_ledger.total_queries(), parallel_ledger.total_queries());
}

TEST(OracleTest, StreamingIsOneRoundInOrder) {
  const ModularObjective f = Modular({1, 2, 4, 8, 16});
  for (int parallelism : {1, 3}) {
    QueryLedger ledger;
    Oracle oracle(f, ledger, parallelism);
    std::vector<double> seen;
    std::vector<std::size_t> order;
    oracle.EvaluateStreaming(
        32, 5, [](std::size_t i, Subset& slot) { slot = testing::FromMask(5, i); },
        [&](std::size_t i, double v) {
          order.push_back(i);
          seen.push_back(v);
        });
    ASSERT_EQ(seen.size(), 32u);
    for (std::size_t i = 0; i < 32; ++i) {
      EXPECT_EQ(order[i], i);
      EXPECT_DOUBLE_EQ(seen[i], static_cast<double>(i));
    }
    EXPECT_EQ(ledger.rounds(), 1);
    EXPECT_EQ(ledger.total_queries(), 32);
  }
}

TEST(LedgerTest, MergeParallelAddsQueriesAndMaxesRounds) {
  QueryLedger a;
  a.RecordRound(3);
  a.RecordRound(4);
  QueryLedger b;
  b.RecordRound(5);
  b.RecordRound(6);
  b.RecordRound(7);
  a.MergeParallel(b, 1);
  EXPECT_EQ(std::vector<std::int64_t>(a.per_round().begin(), a.per_round().end()),
            (std::vector<std::int64_t>{3, 9, 6, 7}));
  EXPECT_EQ(a.total_queries(), 25);
  EXPECT_EQ(a.rounds(), 4);
  EXPECT_TRUE(a.Conserved());
}

TEST(LedgerTest, SamplesTrackedSeparately) {
  QueryLedger a;
  a.RecordRound(10);
  a.RecordSamples(5);
  EXPECT_EQ(a.total_queries(), 10);
  EXPECT_EQ(a.indicator_samples(), 5);
}

TEST(RngTest, DeterministicAndDerived) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
  Rng c(42);
  const Rng d1 = c.Derive(1);
  const Rng d1_again = c.Derive(1);
  Rng x = d1;
  Rng y = d1_again;
  Rng z = c.Derive(2);
  EXPECT_EQ(x.Next(), y.Next());
  EXPECT_NE(Rng(42).Derive(1).Next(), z.Next());
  EXPECT_EQ(c.Next(), Rng(42).Next());
}

TEST(RngTest, UniformBelowIsRoughlyUniform) {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.UniformBelow(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  // Each bucket is Binomial(70000, 1/7): sd about 92.
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RngTest, SampleDrawsDistinctPoolMembers) {
  Rng rng(2);
  const std::vector<int> pool = {4, 8, 15, 16, 23, 42};
  const auto s = rng.Sample(std::span<const int>(pool), 4);
  ASSERT_EQ(s.size(), 4u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NE(std::find(pool.begin(), pool.end(), s[i]), pool.end());
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(s[i], s[j]);
  }
  EXPECT_EQ(rng.Sample(std::span<const int>(pool), 10).size(), pool.size());
}

}  // namespace
}  // namespace submax
