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

// Evaluation-oracle layer. Algorithms never see an objective's raw value
// function: every query goes through Oracle, which meters one adaptive round
// per batch into a QueryLedger.

#ifndef SUBMAX_ORACLE_H_
#define SUBMAX_ORACLE_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace submax {

using ElementId = std::int32_t;

// A subset of the ground set {0, ..., ground_size - 1}, stored as a sorted
// member list plus a membership bitset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int ground_size);

  // Throws ErrorCode::kInvalidSubset on out-of-range or duplicate ids.
  static Subset Of(int ground_size, std::span<const ElementId> members);
  static Subset Of(int ground_size, std::initializer_list<ElementId> members);
  static Subset All(int ground_size);

  int ground_size() const { return ground_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const ElementId> members() const { return {members_.data(), members_.size()}; }

  bool contains(ElementId x) const {
    return x >= 0 && x < ground_size_ &&
           ((words()[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1) != 0;
  }

  Subset With(ElementId x) const;
  // Union with loose ids; repeated ids are merged, out-of-range ids throw.
  Subset Union(std::span<const ElementId> extra) const;
  Subset Union(const Subset& other) const;
  Subset Minus(const Subset& other) const;
  Subset Intersect(const Subset& other) const;

  // In-place forms of base.With(x) and base.Union(extra) that reuse this
  // subset's storage. `base` must not alias *this.
  void AssignWith(const Subset& base, ElementId x);
  void AssignUnion(const Subset& base, std::span<const ElementId> extra);
  bool IsSubsetOf(const Subset& other) const;

  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
  }

 private:
  // Takes ownership of already sorted, unique, in-range members.
  using MemberList = std::vector<ElementId>;

  Subset(int ground_size, MemberList sorted_members);

  int ground_size_ = 0;
  MemberList members_;
  // Membership bits: inline for ground sets of up to 64 elements.
  const std::uint64_t* words() const { return bits_.empty() ? &small_bits_ : bits_.data(); }
  std::uint64_t* words() { return bits_.empty() ? &small_bits_ : bits_.data(); }
  void SetBits();

  std::uint64_t small_bits_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A set function f over {0, ..., n-1}. Implementations must be pure and safe
// to call concurrently.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual int n() const = 0;
  virtual std::string name() const = 0;

 protected:
  virtual double Value(const Subset& s) const = 0;

 private:
  friend class Oracle;
  friend double EvaluateOffLedger(const Objective& f, const Subset& s);
};

// Evaluates f outside any ledger. For validators and test oracles only;
// algorithm code must query through an Oracle.
double EvaluateOffLedger(const Objective& f, const Subset& s);

// Record of oracle use: one entry per adaptive round.
class QueryLedger {
 public:
  void RecordRound(std::int64_t queries);
  // Logical D_t samples (each costs two raw evaluations).
  void RecordSamples(std::int64_t samples) { samples_ += samples; }

  std::int64_t total_queries() const { return total_; }
  int rounds() const { return static_cast<int>(per_round_.size()); }
  std::span<const std::int64_t> per_round() const { return per_round_; }
  std::int64_t indicator_samples() const { return samples_; }

  // Folds in a ledger whose round i ran concurrently with round offset + i
  // of this one: queries add, rounds take the max. Requires
  // offset <= rounds().
  void MergeParallel(const QueryLedger& other, int offset);

  // total_queries == sum of per-round queries.
  bool Conserved() const;

 private:
  std::vector<std::int64_t> per_round_;
  std::int64_t total_ = 0;
  std::int64_t samples_ = 0;
};

struct MarginalBatch {
  double base_value = 0.0;
  std::vector<double> marginals;
};

class Oracle {
 public:
  // `parallelism` > 1 fans a batch out over that many threads; results and
  // ledger entries do not depend on it.
  Oracle(const Objective& f, QueryLedger& ledger, int parallelism = 1);

  int n() const { return f_.n(); }
  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  // One adaptive round of queries.size() queries. Values come back in query
  // order.
  std::vector<double> EvaluateBatch(std::span<const Subset> queries);

  // One adaptive round of `count` queries, built and evaluated `chunk` at a
  // time so a large round need not be held in memory at once. fill(i, slot)
  // writes query i into a reused slot and is called in index order on the
  // calling thread; take(i, value) receives the values in the same order.
  void EvaluateStreaming(std::size_t count, std::size_t chunk,
                         const std::function<void(std::size_t, Subset&)>& fill,
                         const std::function<void(std::size_t, double)>& take);

  // Delta(x, base) = f(base + x) - base_value for each candidate, with
  // base_value = f(base) already known. One round, |candidates| queries.
  std::vector<double> BatchMarginals(const Subset& base,
                                     std::span<const ElementId> candidates,
                                     double base_value);

  // Same, with f(base) issued in the same round: |candidates| + 1 queries.
  MarginalBatch BatchMarginalsWithBase(const Subset& base,
                                       std::span<const ElementId> candidates);

 private:
  // Validates and evaluates without touching the ledger.
  void EvaluateInto(std::span<const Subset> queries, std::span<double> values) const;

  const Objective& f_;
  QueryLedger& ledger_;
  int parallelism_;
};

}  // namespace submax

#endif  // SUBMAX_ORACLE_H_
