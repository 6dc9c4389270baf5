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

// Exhaustive and sampled checks used as independent oracles. None of these
// touch a QueryLedger.

#ifndef SUBMAX_VALIDATION_H_
#define SUBMAX_VALIDATION_H_

#include <cstdint>
#include <optional>

#include "oracle.h"

namespace submax {

inline constexpr int kMaxBruteForceSize = 24;

struct OptResult {
  Subset set;
  double value = 0.0;
};

// Maximizes f over all subsets of `within` (default: the whole ground set)
// with at most k members. Ties go to the lexicographically smallest member
// list. Throws kTooLarge when the searched ground set exceeds
// kMaxBruteForceSize elements.
OptResult BruteForceOpt(const Objective& f, int k,
                        const std::optional<Subset>& within = std::nullopt);

struct SubmodularityReport {
  int trials = 0;
  int violations = 0;
  // Largest observed Delta(x, T) - Delta(x, S) over sampled S <= T, x not in
  // T. Positive means diminishing returns failed somewhere.
  double max_violation = 0.0;
  int negative_values = 0;
  double min_value = 0.0;

  bool ok() const { return violations == 0 && negative_values == 0; }
};

// Samples `trials` triples (S subset of T, x outside T) and counts
// Delta(x, S) < Delta(x, T) - tol and f < -tol, with
// tol = 1e-9 * max(1, |values involved|).
SubmodularityReport CheckSubmodularity(const Objective& f, int trials,
                                       std::uint64_t seed);

// Exact mean of f(T) over every k-subset T of `s`.
double DownsampleMean(const Objective& f, const Subset& s, int k);

}  // namespace submax

#endif  // SUBMAX_VALIDATION_H_
