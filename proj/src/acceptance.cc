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

#include "acceptance.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <memory>

#include "baselines.h"
#include "error.h"
#include "experiment.h"
#include "nonmonotone_max.h"
#include "objectives.h"
#include "oracle.h"
#include "rng.h"
#include "threshold_sampling.h"
#include "unconstrained_max.h"
#include "validation.h"

namespace submax {
namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct CriterionSpec {
  const char* name;
  double limit_seconds;
  Verdict (*body)(std::uint64_t seed);
};

std::string Printf(const char* format, ...) __attribute__((format(printf, 1, 2)));

std::string Printf(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[1024];
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
};

Moments Summarize(const std::vector<double>& xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

double MaxSingletonValue(const Objective& f) {
  double best = 0.0;
  for (ElementId x = 0; x < f.n(); ++x) {
    best = std::max(best, EvaluateOffLedger(f, Subset::Of(f.n(), {x})));
  }
  return best;
}

Subset FromMask(int n, std::uint32_t mask) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < n; ++x) {
    if ((mask >> x) & 1U) members.push_back(x);
  }
  return Subset::Of(n, members);
}

std::uint32_t ToMask(const Subset& s) {
  std::uint32_t mask = 0;
  for (ElementId x : s.members()) mask |= 1U << x;
  return mask;
}

std::unique_ptr<Objective> Synthetic(InstanceKind kind, int n, double p, int dim,
                                     std::uint64_t seed) {
  SyntheticSpec spec;
  spec.n = n;
  spec.p = p;
  spec.dim = dim;
  return MakeObjective(GenerateSynthetic(kind, spec, seed));
}

std::unique_ptr<Objective> RandomCoverage(int n, int universe, double p, Rng& rng) {
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  for (auto& items : covers) {
    for (int j = 0; j < universe; ++j) {
      if (rng.UniformOpenUnit() < p) items.push_back(j);
    }
  }
  return std::make_unique<CoverageObjective>(universe, std::move(covers));
}

// Runs ending with |S| < k and an empty pool must leave every marginal below
// tau.
Verdict TerminationMarginals(std::uint64_t seed) {
  constexpr int kRuns = 200;
  constexpr int kK = 10;
  constexpr double kDelta = 0.05;
  Rng rng(seed);
  const auto f = RandomCoverage(50, 100, 0.08, rng);
  const double tau = 0.5 * MaxSingletonValue(*f);
  const ThresholdParams params{.k = kK, .tau = tau, .eps = 0.25, .delta = kDelta};
  const std::int64_t samples = DeriveThresholdConstants(f->n(), params).samples;
  int checked = 0;
  int failures = 0;
  std::map<std::string_view, int> reasons;
  for (int run = 0; run < kRuns; ++run) {
    Rng run_rng = rng.Derive(static_cast<std::uint64_t>(run));
    const SamplingOutcome out = ThresholdSampling(*f, params, run_rng);
    ++reasons[BreakReasonName(out.reason)];
    if (out.solution.size() < kK && out.candidates.empty()) {
      ++checked;
      if (!VerifyTerminationMarginals(*f, out, tau)) ++failures;
    }
  }
  const int allowed = static_cast<int>(kDelta * kRuns) + 3;
  std::string histogram;
  for (const auto& [name, count] : reasons) {
    histogram += Printf(" %.*s=%d", static_cast<int>(name.size()), name.data(), count);
  }
  return {failures <= allowed && checked > 0,
          Printf("samples=%lld checked=%d failures=%d allowed=%d reasons:%s",
                 static_cast<long long>(samples), checked, failures, allowed,
                 histogram.c_str())};
}

// Mean of f(S) - (1 - 2 eps_hat) tau |S| must be at least -2 standard errors.
Verdict AverageMarginal(std::uint64_t seed) {
  constexpr int kRuns = 1000;
  const auto f = Synthetic(InstanceKind::kSyntheticCut, 50, 0.1, 16, seed);
  const double tau = 0.5 * MaxSingletonValue(*f);
  const ThresholdParams params{
      .k = 10, .tau = tau, .eps = 0.25, .delta = 0.05, .sample_override = 100};
  const double eps_hat = DeriveThresholdConstants(f->n(), params).eps_hat;
  Rng rng(seed);
  std::vector<double> gaps;
  double size_sum = 0.0;
  for (int run = 0; run < kRuns; ++run) {
    Rng run_rng = rng.Derive(static_cast<std::uint64_t>(run));
    const SamplingOutcome out = ThresholdSampling(*f, params, run_rng);
    const double size = static_cast<double>(out.solution.size());
    gaps.push_back(EvaluateOffLedger(*f, out.solution) - (1.0 - 2.0 * eps_hat) * tau * size);
    size_sum += size;
  }
  const Moments m = Summarize(gaps);
  const double se = m.sd / std::sqrt(static_cast<double>(kRuns));
  return {m.mean >= -2.0 * se,
          Printf("tau=%.4f mean|S|=%.2f mean_gap=%.4f se=%.4f floor=%.4f", tau,
                 size_sum / kRuns, m.mean, se, -2.0 * se)};
}

// Every element's inclusion frequency under the break variant stays below
// 1/3 plus three binomial standard deviations.
Verdict InclusionProbability(std::uint64_t seed) {
  constexpr int kRuns = 1000;
  constexpr int kK = 5;
  const auto f = Synthetic(InstanceKind::kSyntheticCut, 60, 0.1, 16, seed);
  const double tau = 0.5 * MaxSingletonValue(*f);
  const ThresholdParams params{.k = kK,
                               .tau = tau,
                               .eps = 0.25,
                               .delta = 0.05,
                               .break_size = 3 * kK,
                               .sample_override = 100};
  Rng rng(seed);
  std::vector<int> hits(static_cast<std::size_t>(f->n()), 0);
  double size_sum = 0.0;
  for (int run = 0; run < kRuns; ++run) {
    Rng run_rng = rng.Derive(static_cast<std::uint64_t>(run));
    const SamplingOutcome out = ThresholdSampling(*f, params, run_rng);
    for (ElementId x : out.solution.members()) ++hits[static_cast<std::size_t>(x)];
    size_sum += static_cast<double>(out.solution.size());
  }
  const double bound = 1.0 / 3.0 + 3.0 * std::sqrt(0.33 * 0.67 / kRuns);
  const auto worst = std::max_element(hits.begin(), hits.end());
  const double max_freq = static_cast<double>(*worst) / kRuns;
  return {max_freq <= bound,
          Printf("mean|S|=%.2f max_freq=%.3f (element %d) bound=%.3f", size_sum / kRuns,
                 max_freq, static_cast<int>(worst - hits.begin()), bound)};
}

// Success means f(S) >= (1/4 - eps) OPT_A; its frequency must reach
// 0.9 - 3 sigma.
Verdict UnconstrainedGuarantee(std::uint64_t seed) {
  constexpr int kRuns = 500;
  constexpr double kEps = 0.2;
  const std::array<std::unique_ptr<Objective>, 3> instances = {
      Synthetic(InstanceKind::kSyntheticCut, 14, 0.3, 4, seed),
      Synthetic(InstanceKind::kRevenue, 12, 0.3, 4, seed + 1),
      Synthetic(InstanceKind::kMovie, 10, 0.3, 4, seed + 2)};
  const double floor = 0.9 - 3.0 * std::sqrt(0.9 * 0.1 / kRuns);
  const UnconstrainedParams params{.eps = kEps, .delta = 0.1};
  Rng rng(seed);
  bool passed = true;
  std::string detail = Printf("draws=%d floor=%.3f", UnconstrainedDraws(params), floor);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Objective& f = *instances[i];
    const double opt = BruteForceOpt(f, f.n()).value;
    const double target = (0.25 - kEps) * opt - 1e-9 * std::max(1.0, opt);
    const Subset ground = Subset::All(f.n());
    int successes = 0;
    for (int run = 0; run < kRuns; ++run) {
      Rng run_rng = rng.Derive(i * kRuns + static_cast<std::uint64_t>(run));
      QueryLedger ledger;
      Oracle oracle(f, ledger);
      double value = 0.0;
      UnconstrainedMax(oracle, ground, params, run_rng, &value);
      if (value >= target) ++successes;
    }
    const double freq = static_cast<double>(successes) / kRuns;
    passed = passed && freq >= floor;
    detail += Printf(" %s(n=%d):%.3f", f.name().c_str(), f.n(), freq);
  }
  return {passed, detail};
}

// E[f(T)] over uniform k-subsets T of S is at least k/|S| f(S).
Verdict DownsamplingBound(std::uint64_t seed) {
  constexpr int kN = 8;
  constexpr int kInstances = 5;
  constexpr double kTol = 1e-9;
  const std::array<InstanceKind, 3> kinds = {InstanceKind::kImage, InstanceKind::kMovie,
                                             InstanceKind::kRevenue};
  long long checks = 0;
  long long violations = 0;
  double min_slack = INFINITY;
  for (InstanceKind kind : kinds) {
    for (int i = 0; i < kInstances; ++i) {
      const auto f = Synthetic(kind, kN, 0.4, 4, seed + 100 * static_cast<int>(kind) + i);
      for (std::uint32_t mask = 1; mask < (1U << kN); ++mask) {
        const Subset s = FromMask(kN, mask);
        const double fs = EvaluateOffLedger(*f, s);
        const int size = static_cast<int>(s.size());
        for (int k = 1; k <= size; ++k) {
          const double slack = DownsampleMean(*f, s, k) - static_cast<double>(k) / size * fs;
          min_slack = std::min(min_slack, slack);
          ++checks;
          if (slack < -kTol) ++violations;
        }
      }
    }
  }
  return {violations == 0, Printf("checks=%lld violations=%lld min_slack=%.3g tol=%.0e",
                                  checks, violations, min_slack, kTol)};
}

// Mean ANM value per instance must reach 0.01 OPT.
Verdict ApproximationFloor(std::uint64_t seed) {
  constexpr int kInstances = 20;
  constexpr int kRuns = 200;
  constexpr int kK = 4;
  constexpr double kFloor = 0.01;
  const NonmonotoneParams params{.k = kK, .eps = 0.3, .delta = 0.1, .sample_override = 100};
  bool passed = true;
  double min_ratio = INFINITY;
  double ratio_sum = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const auto f = Synthetic(InstanceKind::kRevenue, 12, 0.3, 4, seed + i);
    const double opt = BruteForceOpt(*f, kK).value;
    Rng rng(seed + i);
    double sum = 0.0;
    for (int run = 0; run < kRuns; ++run) {
      Rng run_rng = rng.Derive(static_cast<std::uint64_t>(run));
      sum += AdaptiveNonmonotoneMax(*f, params, run_rng).value;
    }
    const double mean = sum / kRuns;
    passed = passed && mean >= kFloor * opt;
    const double ratio = opt > 0.0 ? mean / opt : 1.0;
    min_ratio = std::min(min_ratio, ratio);
    ratio_sum += ratio;
  }
  return {passed, Printf("min mean/OPT=%.3f avg mean/OPT=%.3f floor=%.2f", min_ratio,
                         ratio_sum / kInstances, kFloor)};
}

// f(S2*) - f(S2* + S) <= f(S*) - f(S* + S) for S2* = S* \ A, over every A
// and S.
Verdict OptimalGapBound(std::uint64_t seed) {
  constexpr int kN = 8;
  constexpr int kInstances = 3;
  constexpr std::uint32_t kAll = 1U << kN;
  constexpr double kTol = 1e-9;
  const std::array<InstanceKind, 4> kinds = {InstanceKind::kSyntheticCut,
                                             InstanceKind::kRevenue, InstanceKind::kImage,
                                             InstanceKind::kMovie};
  long long checks = 0;
  long long violations = 0;
  double worst = -INFINITY;
  std::vector<double> values(kAll);
  for (InstanceKind kind : kinds) {
    for (int i = 0; i < kInstances; ++i) {
      const auto f = Synthetic(kind, kN, 0.4, 4, seed + 100 * static_cast<int>(kind) + i);
      for (std::uint32_t mask = 0; mask < kAll; ++mask) {
        values[mask] = EvaluateOffLedger(*f, FromMask(kN, mask));
      }
      for (int k = 1; k <= kN; ++k) {
        const std::uint32_t star = ToMask(BruteForceOpt(*f, k).set);
        for (std::uint32_t a = 0; a < kAll; ++a) {
          const std::uint32_t rest = star & ~a;
          for (std::uint32_t s = 0; s < kAll; ++s) {
            const double excess = (values[rest] - values[rest | s]) -
                                  (values[star] - values[star | s]);
            worst = std::max(worst, excess);
            ++checks;
            if (excess > kTol) ++violations;
          }
        }
      }
    }
  }
  return {violations == 0, Printf("checks=%lld violations=%lld max_excess=%.3g tol=%.0e",
                                  checks, violations, worst, kTol)};
}

// Round and query accounting across ground-set sizes.
Verdict LedgerAccounting(std::uint64_t seed) {
  constexpr std::array<int, 4> kSizes = {50, 100, 200, 400};
  constexpr int kK = 10;
  constexpr double kEps = 0.25;
  constexpr int kTrials = 3;
  const NonmonotoneParams params{.k = kK, .eps = kEps, .delta = 0.05, .sample_override = 100};
  std::vector<double> mean_rounds;
  bool queries_ok = true;
  bool greedy_ok = true;
  bool random_ok = true;
  bool conserved = true;
  std::string detail;
  for (int n : kSizes) {
    const auto f = Synthetic(InstanceKind::kSyntheticCut, n, 0.1, 16, seed + n);
    const double query_bound = 200.0 * n * std::log(static_cast<double>(kK)) / (kEps * kEps);
    double rounds = 0.0;
    std::int64_t max_queries = 0;
    for (int t = 0; t < kTrials; ++t) {
      Rng rng(seed + static_cast<std::uint64_t>(t));
      const NonmonotoneResult result = AdaptiveNonmonotoneMax(*f, params, rng);
      rounds += result.ledger.rounds();
      max_queries = std::max(max_queries, result.ledger.total_queries());
      conserved = conserved && result.ledger.Conserved();
      Rng random_rng(seed + static_cast<std::uint64_t>(t));
      const AlgorithmRun random = RandomPrefix(*f, kK, random_rng);
      random_ok = random_ok && random.ledger.rounds() <= 2;
    }
    mean_rounds.push_back(rounds / kTrials);
    queries_ok = queries_ok && static_cast<double>(max_queries) <= query_bound;
    const AlgorithmRun greedy = Greedy(*f, kK);
    greedy_ok = greedy_ok &&
                greedy.ledger.rounds() == static_cast<int>(greedy.solution.size()) + 1;
    detail += Printf("n=%d rounds=%.1f queries=%lld/%.0f greedy=%d/%zu; ", n,
                     mean_rounds.back(), static_cast<long long>(max_queries), query_bound,
                     greedy.ledger.rounds(), greedy.solution.size());
  }
  const double growth = mean_rounds.back() / mean_rounds.front();
  detail += Printf("growth=%.2f (max 3) random_ok=%d conserved=%d", growth, random_ok,
                   conserved);
  return {growth <= 3.0 && queries_ok && greedy_ok && random_ok && conserved, detail};
}

// ANM against the baselines on a sparse revenue graph.
Verdict QualitativeComparison(std::uint64_t seed) {
  constexpr int kN = 300;
  constexpr int kK = 100;
  constexpr int kTrials = 10;
  const auto f = Synthetic(InstanceKind::kRevenue, kN, 3.0 / (kN - 1), 16, seed);
  AlgorithmSettings settings{.k = kK, .eps = 0.25, .delta = 0.05, .samples = 100};
  std::vector<double> anm_values;
  std::vector<double> anm_rounds;
  std::vector<double> random_values;
  for (int t = 0; t < kTrials; ++t) {
    Rng anm_rng(seed + static_cast<std::uint64_t>(t));
    const AlgorithmRun anm = RunAlgorithm(*f, Algorithm::kAnm, settings, anm_rng);
    anm_values.push_back(anm.value);
    anm_rounds.push_back(anm.ledger.rounds());
    Rng random_rng(seed + static_cast<std::uint64_t>(t));
    random_values.push_back(RunAlgorithm(*f, Algorithm::kRandom, settings, random_rng).value);
  }
  Rng greedy_rng(seed);
  const AlgorithmRun greedy = RunAlgorithm(*f, Algorithm::kGreedy, settings, greedy_rng);
  const double anm_value = Summarize(anm_values).mean;
  const double random_value = Summarize(random_values).mean;
  const double rounds = Summarize(anm_rounds).mean;
  const double round_cap = 0.2 * greedy.ledger.rounds();
  return {anm_value >= random_value && rounds <= round_cap,
          Printf("anm value=%.3f random value=%.3f greedy value=%.3f; anm rounds=%.1f "
                 "cap=%.1f (greedy %d)",
                 anm_value, random_value, greedy.value, rounds, round_cap,
                 greedy.ledger.rounds())};
}

// Diminishing returns and nonnegativity on sampled triples.
Verdict SubmodularityChecks(std::uint64_t seed) {
  constexpr int kTriples = 10000;
  const std::array<std::unique_ptr<Objective>, 4> objectives = {
      Synthetic(InstanceKind::kImage, 30, 0.2, 8, seed),
      Synthetic(InstanceKind::kMovie, 30, 0.2, 8, seed + 1),
      Synthetic(InstanceKind::kRevenue, 40, 0.2, 8, seed + 2),
      Synthetic(InstanceKind::kSyntheticCut, 40, 0.2, 8, seed + 3)};
  bool passed = true;
  std::string detail = Printf("triples=%d", kTriples);
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    const SubmodularityReport report = CheckSubmodularity(*objectives[i], kTriples, seed + i);
    passed = passed && report.ok();
    detail += Printf(" %s:violations=%d,negative=%d,max_excess=%.2g",
                     objectives[i]->name().c_str(), report.violations, report.negative_values,
                     report.max_violation);
  }
  return {passed, detail};
}

constexpr std::array<CriterionSpec, kCriterionCount> kCriteria = {{
    {"threshold-termination-marginals", 60.0, TerminationMarginals},
    {"threshold-average-marginal", 120.0, AverageMarginal},
    {"break-variant-inclusion", 120.0, InclusionProbability},
    {"unconstrained-max-guarantee", 60.0, UnconstrainedGuarantee},
    {"downsampling-bound", 30.0, DownsamplingBound},
    {"anm-approximation-floor", 300.0, ApproximationFloor},
    {"optimal-gap-bound", 60.0, OptimalGapBound},
    {"ledger-accounting", 300.0, LedgerAccounting},
    {"baseline-comparison", 600.0, QualitativeComparison},
    {"submodularity", 60.0, SubmodularityChecks},
}};

}  // namespace

CriterionResult RunCriterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) {
    Fail(ErrorCode::kInvalidArgument, "criterion id out of range");
  }
  const CriterionSpec& spec = kCriteria[static_cast<std::size_t>(id - 1)];
  const auto start = std::chrono::steady_clock::now();
  const Verdict verdict = spec.body(seed);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {id, spec.name, verdict.passed && seconds < spec.limit_seconds, verdict.detail,
          seconds, spec.limit_seconds};
}

std::vector<int> SuiteCriteria(std::string_view suite) {
  static const std::map<std::string_view, std::vector<int>> kSuites = {
      {"threshold", {1, 2}},   {"average-marginal", {2}}, {"inclusion", {3}},
      {"unconstrained", {4}},  {"downsampling", {5}},     {"approximation", {6, 7}},
      {"gap", {7}},            {"ledgers", {8, 9}},       {"baselines", {9}},
      {"submodularity", {10}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}};
  const auto it = kSuites.find(suite);
  if (it == kSuites.end()) {
    Fail(ErrorCode::kUnknownName, "unknown suite '" + std::string(suite) + "'");
  }
  return it->second;
}

std::string FormatCriterion(const CriterionResult& r) {
  return Printf("%s [%d] %s: %s (%.1f s, limit %.0f s)", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds, r.limit_seconds);
}

std::vector<CriterionResult> RunAcceptanceSuite(
    std::string_view suite, std::uint64_t seed,
    const std::function<void(const std::string&)>& sink) {
  std::vector<CriterionResult> results;
  for (int id : SuiteCriteria(suite)) {
    results.push_back(RunCriterion(id, seed));
    if (sink) sink(FormatCriterion(results.back()));
  }
  return results;
}

}  // namespace submax
