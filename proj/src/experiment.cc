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

#include "experiment.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>

#include "error.h"
#include "io.h"
#include "nonmonotone_max.h"
#include "threshold_sampling.h"

namespace submax {
namespace {

constexpr std::string_view kTraceHeader =
    "algorithm,trial,round,cum_queries,best_value,k,seed";
constexpr std::string_view kSummaryHeader =
    "algorithm,k,mean_value,std_value,mean_queries,mean_rounds";

void WriteTimestamp(std::ostream& out) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  out << "# generated " << buf << '\n';
}

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T ParseField(const std::string& field, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    Fail(ErrorCode::kParse,
         "line " + std::to_string(line_no) + ": bad field '" + field + "'");
  }
  return value;
}

// Data lines of a CSV with the given header; comments and blanks skipped.
std::vector<std::pair<int, std::vector<std::string>>> ReadCsv(std::istream& in,
                                                              std::string_view header,
                                                              std::size_t width) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  bool seen_header = false;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line != header) Fail(ErrorCode::kParse, "unexpected CSV header '" + line + "'");
      seen_header = true;
      continue;
    }
    auto fields = Split(line);
    if (fields.size() != width) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(width) + " fields");
    }
    rows.push_back({line_no, std::move(fields)});
  }
  if (!seen_header) Fail(ErrorCode::kParse, "missing CSV header");
  return rows;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  return out;
}

}  // namespace

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "anm") return Algorithm::kAnm;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "random") return Algorithm::kRandom;
  if (name == "rlg") return Algorithm::kRandomLazyGreedy;
  Fail(ErrorCode::kUnknownName, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAnm:
      return "anm";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kRandom:
      return "random";
    case Algorithm::kRandomLazyGreedy:
      return "rlg";
  }
  return "?";
}

double DefaultEps(Algorithm algorithm) {
  return algorithm == Algorithm::kRandomLazyGreedy ? 0.01 : 0.25;
}

AlgorithmRun RunAlgorithm(const Objective& f, Algorithm algorithm,
                          const AlgorithmSettings& settings, Rng& rng,
                          std::ostream* debug_trace) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return Greedy(f, settings.k, settings.parallelism);
    case Algorithm::kRandom:
      return RandomPrefix(f, settings.k, rng, settings.parallelism);
    case Algorithm::kRandomLazyGreedy:
      return RandomLazyGreedy(f, settings.k, rng, nullptr, settings.parallelism);
    case Algorithm::kAnm:
      break;
  }
  NonmonotoneParams params;
  params.k = settings.k;
  params.eps = settings.eps;
  params.delta = settings.delta;
  params.sample_override = settings.samples;
  std::vector<std::vector<ThresholdRoundRecord>> traces;
  NonmonotoneOptions options;
  options.parallelism = settings.parallelism;
  if (debug_trace != nullptr) options.traces = &traces;
  NonmonotoneResult result = AdaptiveNonmonotoneMax(f, params, rng, options);
  for (std::size_t i = 0; i < traces.size(); ++i) {
    WriteThresholdTrace(*debug_trace, traces[i],
                        {{"k", settings.k}, {"grid", static_cast<std::int64_t>(i)}});
  }
  AlgorithmRun run;
  run.solution = std::move(result.solution);
  run.value = result.value;
  run.ledger = std::move(result.ledger);
  run.best_by_round = std::move(result.best_by_round);
  return run;
}

Instance LoadInstance(const RunConfig& config) {
  if (!config.data_path) return GenerateSynthetic(config.objective, config.synthetic, config.seed);
  Instance instance;
  instance.kind = config.objective;
  instance.lambda = config.synthetic.lambda;
  if (UsesSimilarity(config.objective)) {
    instance.data = LoadSimilarityCsv(*config.data_path);
  } else {
    instance.data = LoadEdgeList(*config.data_path, config.node_count);
  }
  return instance;
}

ExperimentResult RunExperiment(const RunConfig& config, const Instance& instance,
                               std::ostream* debug_trace) {
  if (config.trials < 1) Fail(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const std::unique_ptr<Objective> f = MakeObjective(instance);
  for (int k : config.ks) {
    if (k < 1 || k > f->n()) {
      Fail(ErrorCode::kInvalidArgument, "k = " + std::to_string(k) + " outside [1, n = " +
                                            std::to_string(f->n()) + "]");
    }
  }
  const std::string name(AlgorithmName(config.algorithm));
  ExperimentResult result;
  for (int k : config.ks) {
    AlgorithmSettings settings;
    settings.k = k;
    settings.eps = config.eps.value_or(DefaultEps(config.algorithm));
    settings.delta = config.delta;
    settings.samples = config.samples;
    settings.parallelism = config.parallelism;
    std::vector<double> values;
    double queries = 0.0;
    double rounds = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
      Rng rng(seed);
      const AlgorithmRun run = RunAlgorithm(*f, config.algorithm, settings, rng, debug_trace);
      std::int64_t cumulative = 0;
      for (int r = 0; r < run.ledger.rounds(); ++r) {
        cumulative += run.ledger.per_round()[static_cast<std::size_t>(r)];
        result.trace.push_back({name, trial, r, cumulative,
                                run.best_by_round[static_cast<std::size_t>(r)], k, seed});
      }
      values.push_back(EvaluateOffLedger(*f, run.solution));
      queries += static_cast<double>(run.ledger.total_queries());
      rounds += run.ledger.rounds();
    }
    SummaryRow row;
    row.algorithm = name;
    row.k = k;
    const double count = static_cast<double>(values.size());
    for (double v : values) row.mean_value += v;
    row.mean_value /= count;
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - row.mean_value) * (v - row.mean_value);
      row.std_value = std::sqrt(ss / (count - 1));
    }
    row.mean_queries = queries / count;
    row.mean_rounds = rounds / count;
    result.summary.push_back(row);
  }
  return result;
}

ExperimentResult RunExperimentToFiles(const RunConfig& config) {
  const Instance instance = LoadInstance(config);
  std::ofstream debug;
  if (config.debug_trace_path) debug = OpenForWrite(*config.debug_trace_path);
  ExperimentResult result =
      RunExperiment(config, instance, config.debug_trace_path ? &debug : nullptr);
  if (config.trace_path) {
    std::ofstream out = OpenForWrite(*config.trace_path);
    WriteTraceCsv(out, result.trace, config.timestamp);
  }
  if (config.out_path) {
    std::ofstream out = OpenForWrite(*config.out_path);
    WriteSummaryCsv(out, result.summary, config.timestamp);
  }
  return result;
}

void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows, bool timestamp) {
  if (timestamp) WriteTimestamp(out);
  out << kTraceHeader << '\n';
  for (const TraceRow& r : rows) {
    out << r.algorithm << ',' << r.trial << ',' << r.round << ',' << r.cum_queries << ','
        << FormatDouble(r.best_value) << ',' << r.k << ',' << r.seed << '\n';
  }
}

std::vector<TraceRow> ParseTraceCsv(std::istream& in) {
  std::vector<TraceRow> rows;
  for (const auto& [line_no, f] : ReadCsv(in, kTraceHeader, 7)) {
    rows.push_back({f[0], ParseField<int>(f[1], line_no), ParseField<int>(f[2], line_no),
                    ParseField<std::int64_t>(f[3], line_no),
                    ParseField<double>(f[4], line_no), ParseField<int>(f[5], line_no),
                    ParseField<std::uint64_t>(f[6], line_no)});
  }
  return rows;
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows,
                     bool timestamp) {
  if (timestamp) WriteTimestamp(out);
  out << kSummaryHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << r.algorithm << ',' << r.k << ',' << FormatDouble(r.mean_value) << ','
        << FormatDouble(r.std_value) << ',' << FormatDouble(r.mean_queries) << ','
        << FormatDouble(r.mean_rounds) << '\n';
  }
}

std::vector<SummaryRow> ParseSummaryCsv(std::istream& in) {
  std::vector<SummaryRow> rows;
  for (const auto& [line_no, f] : ReadCsv(in, kSummaryHeader, 6)) {
    rows.push_back({f[0], ParseField<int>(f[1], line_no), ParseField<double>(f[2], line_no),
                    ParseField<double>(f[3], line_no), ParseField<double>(f[4], line_no),
                    ParseField<double>(f[5], line_no)});
  }
  return rows;
}

}  // namespace submax
