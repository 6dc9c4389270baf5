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

#ifndef SUBMAX_RNG_H_
#define SUBMAX_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace submax {

// Seeded pseudorandom stream. Every random draw in the library goes through
// one of these, and only on the orchestrating thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(Mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform double in the open interval (0, 1).
  double UniformOpenUnit();

  bool Coin() { return (Next() >> 63) != 0; }

  // Independent stream for sub-task `stream`; a pure function of
  // (seed, stream), so it does not advance this generator.
  Rng Derive(std::uint64_t stream) const;

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = UniformBelow(i);
      std::swap(values[i - 1], values[j]);
    }
  }

  // Uniform t-subset of `pool` in draw order: a partial Fisher-Yates
  // shuffle of a copy of the pool.
  template <typename T>
  std::vector<T> Sample(std::span<const T> pool, std::size_t t) {
    std::vector<T> scratch(pool.begin(), pool.end());
    if (t > scratch.size()) t = scratch.size();
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t j = i + UniformBelow(scratch.size() - i);
      std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(t);
    return scratch;
  }

  static std::uint64_t Mix(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace submax

#endif  // SUBMAX_RNG_H_
