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

#ifndef SUBMAX_UNCONSTRAINED_MAX_H_
#define SUBMAX_UNCONSTRAINED_MAX_H_

#include "oracle.h"
#include "rng.h"

namespace submax {

struct UnconstrainedParams {
  double eps = 0.25;
  double delta = 0.05;
  // Compare against f(empty_value_hint) at no query cost. Off by default so
  // the candidate pool is exactly the random draws.
  bool include_empty = false;
  double empty_value_hint = 0.0;
};

// ceil(log(1/delta) / log(1 + 4 eps / 3)). The (1/4 - eps) guarantee's query
// bound assumes eps <= 1/4; larger eps is accepted.
int UnconstrainedDraws(const UnconstrainedParams& params);

// Best of UnconstrainedDraws() independent uniform subsets of `ground`
// (each element kept with probability 1/2), evaluated in one round. Ties go
// to the earliest draw. `ground` must be nonempty.
Subset UnconstrainedMax(Oracle& oracle, const Subset& ground,
                        const UnconstrainedParams& params, Rng& rng,
                        double* best_value = nullptr);

}  // namespace submax

#endif  // SUBMAX_UNCONSTRAINED_MAX_H_
