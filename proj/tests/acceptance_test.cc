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

// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances and time budgets live with the criteria.

#include <cstdint>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.h"

int main(int argc, char** argv) {
  CLI::App app{"submax acceptance criteria"};
  std::vector<int> ids;
  std::uint64_t seed = 1;
  app.add_option("--criterion", ids, "Criterion id; repeat to run several (default: all)")
      ->check(CLI::Range(1, submax::kCriterionCount));
  app.add_option("--seed", seed, "Master seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (ids.empty()) {
    for (int id = 1; id <= submax::kCriterionCount; ++id) ids.push_back(id);
  }
  bool all_passed = true;
  for (int id : ids) {
    const submax::CriterionResult result = submax::RunCriterion(id, seed);
    std::printf("%s\n", submax::FormatCriterion(result).c_str());
    std::fflush(stdout);
    all_passed = all_passed && result.passed;
  }
  return all_passed ? 0 : 1;
}
