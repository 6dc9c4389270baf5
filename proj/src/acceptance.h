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

// Acceptance criteria for the library, each a self-contained experiment with
// pinned tolerances and a wall-clock budget.

#ifndef SUBMAX_ACCEPTANCE_H_
#define SUBMAX_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace submax {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Measured statistics and the thresholds they were compared against.
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

// Runs criterion `id` (1..kCriterionCount). A run that exceeds its time
// budget fails.
CriterionResult RunCriterion(int id, std::uint64_t seed);

// Criterion ids of a suite: threshold, average-marginal, inclusion,
// unconstrained, downsampling, approximation, gap, ledgers, baselines,
// submodularity or all. Throws kUnknownName.
std::vector<int> SuiteCriteria(std::string_view suite);

// "PASS [id] name: detail (12.3 s, limit 60 s)".
std::string FormatCriterion(const CriterionResult& result);

// Runs every criterion of `suite`, passing each formatted line to `sink` as
// soon as it finishes.
std::vector<CriterionResult> RunAcceptanceSuite(
    std::string_view suite, std::uint64_t seed,
    const std::function<void(const std::string&)>& sink = {});

}  // namespace submax

#endif  // SUBMAX_ACCEPTANCE_H_
