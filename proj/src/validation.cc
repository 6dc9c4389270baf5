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

#include "validation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "error.h"
#include "rng.h"

namespace submax {
namespace {

Subset FromMask(int ground_size, std::span<const ElementId> pool, std::uint32_t mask) {
  std::vector<ElementId> members;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((mask >> i) & 1) members.push_back(pool[i]);
  }
  return Subset::Of(ground_size, members);
}

}  // namespace

OptResult BruteForceOpt(const Objective& f, int k, const std::optional<Subset>& within) {
  const Subset pool_set = within.value_or(Subset::All(f.n()));
  const auto pool = pool_set.members();
  if (pool.size() > static_cast<std::size_t>(kMaxBruteForceSize)) {
    Fail(ErrorCode::kTooLarge, "brute force limited to " +
                                   std::to_string(kMaxBruteForceSize) +
                                   " elements, got " + std::to_string(pool.size()));
  }
  if (k < 0) Fail(ErrorCode::kInvalidArgument, "k must be >= 0");
  OptResult best{Subset(f.n()), EvaluateOffLedger(f, Subset(f.n()))};
  const std::uint32_t limit = std::uint32_t{1} << pool.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (std::popcount(mask) > k) continue;
    Subset candidate = FromMask(f.n(), pool, mask);
    const double value = EvaluateOffLedger(f, candidate);
    if (value > best.value ||
        (value == best.value &&
         std::lexicographical_compare(candidate.members().begin(),
                                      candidate.members().end(),
                                      best.set.members().begin(),
                                      best.set.members().end()))) {
      best = {std::move(candidate), value};
    }
  }
  return best;
}

SubmodularityReport CheckSubmodularity(const Objective& f, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) Fail(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (f.n() < 1) Fail(ErrorCode::kInvalidArgument, "empty ground set");
  Rng rng(seed);
  SubmodularityReport report;
  report.trials = trials;
  report.max_violation = -INFINITY;
  report.min_value = INFINITY;
  for (int trial = 0; trial < trials; ++trial) {
    const auto x = static_cast<ElementId>(rng.UniformBelow(static_cast<std::uint64_t>(f.n())));
    // Random densities so that both tiny and large sets get exercised.
    const double t_density = rng.UniformOpenUnit();
    const double s_density = rng.UniformOpenUnit();
    std::vector<ElementId> t_members;
    std::vector<ElementId> s_members;
    for (ElementId y = 0; y < f.n(); ++y) {
      if (y == x || rng.UniformOpenUnit() >= t_density) continue;
      t_members.push_back(y);
      if (rng.UniformOpenUnit() < s_density) s_members.push_back(y);
    }
    const Subset s = Subset::Of(f.n(), s_members);
    const Subset t = Subset::Of(f.n(), t_members);
    const double fs = EvaluateOffLedger(f, s);
    const double fsx = EvaluateOffLedger(f, s.With(x));
    const double ft = EvaluateOffLedger(f, t);
    const double ftx = EvaluateOffLedger(f, t.With(x));
    const double scale =
        std::max({1.0, std::abs(fs), std::abs(fsx), std::abs(ft), std::abs(ftx)});
    const double tol = 1e-9 * scale;
    const double violation = (ftx - ft) - (fsx - fs);
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > tol) ++report.violations;
    for (double v : {fs, fsx, ft, ftx}) {
      report.min_value = std::min(report.min_value, v);
      if (v < -tol) ++report.negative_values;
    }
  }
  return report;
}

double DownsampleMean(const Objective& f, const Subset& s, int k) {
  const auto pool = s.members();
  if (k < 0 || static_cast<std::size_t>(k) > pool.size()) {
    Fail(ErrorCode::kInvalidArgument, "need 0 <= k <= |S|");
  }
  if (pool.size() > static_cast<std::size_t>(kMaxBruteForceSize)) {
    Fail(ErrorCode::kTooLarge, "downsample enumeration limited to " +
                                   std::to_string(kMaxBruteForceSize) + " elements");
  }
  double total = 0.0;
  std::int64_t count = 0;
  const std::uint32_t limit = std::uint32_t{1} << pool.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != k) continue;
    total += EvaluateOffLedger(f, FromMask(f.n(), pool, mask));
    ++count;
  }
  return total / static_cast<double>(count);
}

}  // namespace submax
