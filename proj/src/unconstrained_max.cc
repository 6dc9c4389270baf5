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

#include "unconstrained_max.h"

#include <cmath>
#include <vector>

#include "error.h"

namespace submax {

int UnconstrainedDraws(const UnconstrainedParams& params) {
  if (!(params.eps > 0.0)) Fail(ErrorCode::kInvalidArgument, "eps must be > 0");
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  return static_cast<int>(
      std::ceil(std::log(1.0 / params.delta) / std::log1p(4.0 * params.eps / 3.0)));
}

Subset UnconstrainedMax(Oracle& oracle, const Subset& ground,
                        const UnconstrainedParams& params, Rng& rng, double* best_value) {
  if (ground.empty()) Fail(ErrorCode::kInvalidArgument, "unconstrained max needs a nonempty ground set");
  const int draws = UnconstrainedDraws(params);
  std::vector<Subset> queries;
  queries.reserve(static_cast<std::size_t>(draws));
  for (int i = 0; i < draws; ++i) {
    std::vector<ElementId> kept;
    for (ElementId x : ground.members()) {
      if (rng.Coin()) kept.push_back(x);
    }
    queries.push_back(Subset::Of(ground.ground_size(), kept));
  }
  const std::vector<double> values = oracle.EvaluateBatch(queries);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  if (params.include_empty && params.empty_value_hint > values[best]) {
    if (best_value != nullptr) *best_value = params.empty_value_hint;
    return Subset(ground.ground_size());
  }
  if (best_value != nullptr) *best_value = values[best];
  return queries[best];
}

}  // namespace submax
