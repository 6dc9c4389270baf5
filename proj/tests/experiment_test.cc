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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "error.h"
#include "experiment.h"
#include "io.h"
#include "objectives.h"

namespace submax {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("submax_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig CutConfig(Algorithm algorithm, int trials) {
  RunConfig config;
  config.objective = InstanceKind::kSyntheticCut;
  config.synthetic = {.n = 50, .p = 0.1};
  config.algorithm = algorithm;
  config.ks = {5};
  config.trials = trials;
  config.seed = 3;
  return config;
}

TEST(AlgorithmNameTest, RoundTrip) {
  for (Algorithm a : {Algorithm::kAnm, Algorithm::kGreedy, Algorithm::kRandom,
                      Algorithm::kRandomLazyGreedy}) {
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  }
  EXPECT_THROW(ParseAlgorithm("fantom"), Error);
}

TEST(ExperimentTest, RandomTrialsProduceRowsPerTrial) {
  const RunConfig config = CutConfig(Algorithm::kRandom, 10);
  const ExperimentResult r = RunExperiment(config, LoadInstance(config));
  ASSERT_EQ(r.summary.size(), 1u);
  EXPECT_GE(r.summary[0].std_value, 0.0);
  std::vector<int> rows(10, 0);
  for (const TraceRow& row : r.trace) {
    ASSERT_GE(row.trial, 0);
    ASSERT_LT(row.trial, 10);
    ++rows[static_cast<std::size_t>(row.trial)];
    EXPECT_EQ(row.seed, 3u + static_cast<std::uint64_t>(row.trial));
    EXPECT_EQ(row.k, 5);
  }
  for (int c : rows) EXPECT_GE(c, 1);
}

TEST(ExperimentTest, GreedyIsDeterministic) {
  const RunConfig config = CutConfig(Algorithm::kGreedy, 4);
  const ExperimentResult r = RunExperiment(config, LoadInstance(config));
  ASSERT_EQ(r.summary.size(), 1u);
  EXPECT_EQ(r.summary[0].std_value, 0.0);
  EXPECT_EQ(r.summary[0].mean_rounds, 6.0);
}

TEST(ExperimentTest, TraceColumnsAreMonotoneWithinTrial) {
  for (Algorithm a : {Algorithm::kAnm, Algorithm::kGreedy, Algorithm::kRandom,
                      Algorithm::kRandomLazyGreedy}) {
    RunConfig config = CutConfig(a, 2);
    config.ks = {3, 8};
    const ExperimentResult r = RunExperiment(config, LoadInstance(config));
    ASSERT_EQ(r.summary.size(), 2u);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      const TraceRow& prev = r.trace[i - 1];
      const TraceRow& cur = r.trace[i];
      if (prev.trial != cur.trial || prev.k != cur.k) continue;
      EXPECT_EQ(cur.round, prev.round + 1);
      EXPECT_GE(cur.cum_queries, prev.cum_queries);
      EXPECT_GE(cur.best_value, prev.best_value);
    }
  }
}

TEST(ExperimentTest, SummaryMatchesTrace) {
  const RunConfig config = CutConfig(Algorithm::kAnm, 3);
  const ExperimentResult r = RunExperiment(config, LoadInstance(config));
  double rounds = 0;
  double queries = 0;
  double value = 0;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const bool last = i + 1 == r.trace.size() || r.trace[i + 1].trial != r.trace[i].trial;
    if (!last) continue;
    rounds += r.trace[i].round + 1;
    queries += static_cast<double>(r.trace[i].cum_queries);
    value += r.trace[i].best_value;
  }
  EXPECT_DOUBLE_EQ(r.summary[0].mean_rounds, rounds / 3);
  EXPECT_DOUBLE_EQ(r.summary[0].mean_queries, queries / 3);
  EXPECT_NEAR(r.summary[0].mean_value, value / 3, 1e-9);
}

TEST(ExperimentTest, RejectsBadConfigs) {
  RunConfig config = CutConfig(Algorithm::kGreedy, 0);
  const Instance instance = LoadInstance(config);
  EXPECT_THROW(RunExperiment(config, instance), Error);
  config.trials = 1;
  config.ks = {51};
  EXPECT_THROW(RunExperiment(config, instance), Error);
  config.ks = {0};
  EXPECT_THROW(RunExperiment(config, instance), Error);
  config.ks = {5};
  config.data_path = "/nonexistent/edges.txt";
  EXPECT_THROW(LoadInstance(config), Error);
}

TEST(CsvTest, TraceRoundTrip) {
  const RunConfig config = CutConfig(Algorithm::kAnm, 2);
  const ExperimentResult r = RunExperiment(config, LoadInstance(config));
  for (bool stamp : {false, true}) {
    std::stringstream buf;
    WriteTraceCsv(buf, r.trace, stamp);
    EXPECT_EQ(ParseTraceCsv(buf), r.trace);
    std::stringstream sbuf;
    WriteSummaryCsv(sbuf, r.summary, stamp);
    EXPECT_EQ(ParseSummaryCsv(sbuf), r.summary);
  }
}

TEST(CsvTest, RejectsMalformedInput) {
  std::stringstream no_header("anm,0,0,1,1,1,1\n");
  EXPECT_THROW(ParseTraceCsv(no_header), Error);
  std::stringstream empty("");
  EXPECT_THROW(ParseTraceCsv(empty), Error);
  std::stringstream good;
  WriteTraceCsv(good, {{"anm", 0, 0, 5, 1.5, 2, 9}});
  std::string text = good.str() + "anm,0,x,5,1.5,2,9\n";
  std::stringstream bad(text);
  try {
    ParseTraceCsv(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ExperimentFilesTest, RerunsAreByteIdentical) {
  const fs::path dir = TempDir("rerun");
  RunConfig config = CutConfig(Algorithm::kAnm, 2);
  config.timestamp = false;
  config.out_path = (dir / "a_summary.csv").string();
  config.trace_path = (dir / "a_trace.csv").string();
  config.debug_trace_path = (dir / "a_debug.jsonl").string();
  RunExperimentToFiles(config);
  config.out_path = (dir / "b_summary.csv").string();
  config.trace_path = (dir / "b_trace.csv").string();
  config.debug_trace_path = (dir / "b_debug.jsonl").string();
  config.parallelism = 3;
  RunExperimentToFiles(config);
  EXPECT_EQ(ReadFile(dir / "a_summary.csv"), ReadFile(dir / "b_summary.csv"));
  EXPECT_EQ(ReadFile(dir / "a_trace.csv"), ReadFile(dir / "b_trace.csv"));
  EXPECT_EQ(ReadFile(dir / "a_debug.jsonl"), ReadFile(dir / "b_debug.jsonl"));
  EXPECT_NE(ReadFile(dir / "a_debug.jsonl").find("\"grid\":0"), std::string::npos);
  EXPECT_EQ(ReadFile(dir / "a_trace.csv").rfind("algorithm,", 0), 0u);

  config.timestamp = true;
  config.trace_path = (dir / "c_trace.csv").string();
  RunExperimentToFiles(config);
  const std::string stamped = ReadFile(dir / "c_trace.csv");
  ASSERT_EQ(stamped.rfind("#", 0), 0u);
  EXPECT_EQ(stamped.substr(stamped.find('\n') + 1), ReadFile(dir / "a_trace.csv"));
  fs::remove_all(dir);
}

TEST(ExperimentFilesTest, LoadsEdgeListFromDisk) {
  const fs::path dir = TempDir("load");
  const Instance generated =
      GenerateSynthetic(InstanceKind::kRevenue, {.n = 30, .p = 0.2}, 4);
  {
    std::ofstream out(dir / "g.txt");
    WriteEdgeList(out, std::get<WeightedGraph>(generated.data));
  }
  RunConfig from_file;
  from_file.objective = InstanceKind::kRevenue;
  from_file.data_path = (dir / "g.txt").string();
  from_file.node_count = 30;
  from_file.algorithm = Algorithm::kGreedy;
  from_file.ks = {4};
  RunConfig synthetic = from_file;
  synthetic.data_path.reset();
  synthetic.synthetic = {.n = 30, .p = 0.2};
  synthetic.seed = 4;
  const ExperimentResult a = RunExperiment(from_file, LoadInstance(from_file));
  const ExperimentResult b = RunExperiment(synthetic, LoadInstance(synthetic));
  EXPECT_EQ(a.summary[0].mean_value, b.summary[0].mean_value);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace submax
