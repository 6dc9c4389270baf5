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

#include "oracle.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <thread>

#include "error.h"

namespace submax {
namespace {

void CheckRange(int ground_size, ElementId x) {
  if (x < 0 || x >= ground_size) {
    Fail(ErrorCode::kInvalidSubset,
         "element " + std::to_string(x) + " outside ground set of size " +
             std::to_string(ground_size));
  }
}

}  // namespace

Subset::Subset(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) Fail(ErrorCode::kInvalidArgument, "negative ground size");
  SetBits();
}

Subset::Subset(int ground_size, MemberList sorted_members)
    : ground_size_(ground_size),
      members_(std::move(sorted_members)) {
  SetBits();
}

void Subset::SetBits() {
  if (ground_size_ > 64) {
    bits_.assign((static_cast<std::size_t>(ground_size_) + 63) / 64, 0);
  }
  std::uint64_t* w = words();
  for (ElementId x : members_) {
    w[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
  }
}

Subset Subset::Of(int ground_size, std::span<const ElementId> members) {
  MemberList sorted(members.begin(), members.end());
  for (ElementId x : sorted) CheckRange(ground_size, x);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    Fail(ErrorCode::kInvalidSubset, "duplicate element in subset");
  }
  return Subset(ground_size, std::move(sorted));
}

Subset Subset::Of(int ground_size, std::initializer_list<ElementId> members) {
  return Of(ground_size, std::span<const ElementId>(members.begin(), members.size()));
}

Subset Subset::All(int ground_size) {
  MemberList all(static_cast<std::size_t>(ground_size));
  std::iota(all.begin(), all.end(), 0);
  return Subset(ground_size, std::move(all));
}

Subset Subset::With(ElementId x) const {
  Subset out;
  out.AssignWith(*this, x);
  return out;
}

Subset Subset::Union(std::span<const ElementId> extra) const {
  Subset out;
  out.AssignUnion(*this, extra);
  return out;
}

void Subset::AssignWith(const Subset& base, ElementId x) {
  CheckRange(base.ground_size_, x);
  ground_size_ = base.ground_size_;
  small_bits_ = base.small_bits_;
  if (!bits_.empty() || !base.bits_.empty()) bits_ = base.bits_;
  if (base.contains(x)) {
    members_ = base.members_;
    return;
  }
  members_.resize(base.members_.size() + 1);
  const auto split = std::upper_bound(base.members_.begin(), base.members_.end(), x);
  auto next = std::copy(base.members_.begin(), split, members_.begin());
  *next++ = x;
  std::copy(split, base.members_.end(), next);
  words()[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
}

void Subset::AssignUnion(const Subset& base, std::span<const ElementId> extra) {
  // Sort the new ids in a small buffer, then merge backwards into place.
  constexpr std::size_t kInline = 64;
  std::array<ElementId, kInline> inline_added;
  MemberList heap_added;
  ElementId* added = inline_added.data();
  if (extra.size() > kInline) {
    heap_added.resize(extra.size());
    added = heap_added.data();
  }
  std::size_t count = 0;
  for (ElementId x : extra) {
    CheckRange(base.ground_size_, x);
    if (!base.contains(x)) added[count++] = x;
  }
  std::sort(added, added + count);
  count = static_cast<std::size_t>(std::unique(added, added + count) - added);

  ground_size_ = base.ground_size_;
  small_bits_ = base.small_bits_;
  if (!bits_.empty() || !base.bits_.empty()) bits_ = base.bits_;
  members_.resize(base.members_.size() + count);
  std::copy(base.members_.begin(), base.members_.end(), members_.begin());
  std::size_t i = base.members_.size();
  std::size_t j = count;
  for (std::size_t w = members_.size(); j > 0; --w) {
    if (i > 0 && members_[i - 1] > added[j - 1]) {
      members_[w - 1] = members_[--i];
    } else {
      members_[w - 1] = added[--j];
    }
  }
  std::uint64_t* bits = words();
  for (std::size_t k = 0; k < count; ++k) {
    bits[static_cast<std::size_t>(added[k]) >> 6] |= std::uint64_t{1} << (added[k] & 63);
  }
}

Subset Subset::Union(const Subset& other) const {
  if (other.ground_size_ != ground_size_) {
    Fail(ErrorCode::kInvalidSubset, "union of subsets over different ground sets");
  }
  MemberList merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  return Subset(ground_size_, std::move(merged));
}

Subset Subset::Minus(const Subset& other) const {
  MemberList kept;
  for (ElementId x : members_) {
    if (!other.contains(x)) kept.push_back(x);
  }
  return Subset(ground_size_, std::move(kept));
}

Subset Subset::Intersect(const Subset& other) const {
  MemberList kept;
  for (ElementId x : members_) {
    if (other.contains(x)) kept.push_back(x);
  }
  return Subset(ground_size_, std::move(kept));
}

bool Subset::IsSubsetOf(const Subset& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElementId x) { return other.contains(x); });
}

std::string Subset::ToString() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

double EvaluateOffLedger(const Objective& f, const Subset& s) {
  if (s.ground_size() != f.n()) {
    Fail(ErrorCode::kInvalidSubset, "subset ground size does not match objective");
  }
  return f.Value(s);
}

void QueryLedger::RecordRound(std::int64_t queries) {
  per_round_.push_back(queries);
  total_ += queries;
}

void QueryLedger::MergeParallel(const QueryLedger& other, int offset) {
  if (offset < 0 || offset > rounds()) {
    Fail(ErrorCode::kInvalidArgument, "parallel merge offset out of range");
  }
  const std::size_t needed = static_cast<std::size_t>(offset) + other.per_round_.size();
  if (per_round_.size() < needed) per_round_.resize(needed, 0);
  for (std::size_t i = 0; i < other.per_round_.size(); ++i) {
    per_round_[static_cast<std::size_t>(offset) + i] += other.per_round_[i];
  }
  total_ += other.total_;
  samples_ += other.samples_;
}

bool QueryLedger::Conserved() const {
  return std::accumulate(per_round_.begin(), per_round_.end(), std::int64_t{0}) ==
         total_;
}

Oracle::Oracle(const Objective& f, QueryLedger& ledger, int parallelism)
    : f_(f), ledger_(ledger), parallelism_(std::max(1, parallelism)) {}

void Oracle::EvaluateInto(std::span<const Subset> queries, std::span<double> values) const {
  for (const Subset& q : queries) {
    if (q.ground_size() != f_.n()) {
      Fail(ErrorCode::kInvalidSubset, "subset ground size does not match objective");
    }
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(parallelism_),
                            queries.size() / 64 + 1);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = f_.Value(queries[i]);
  };
  if (workers <= 1) {
    run(0, queries.size());
    return;
  }
  const std::size_t chunk = (queries.size() + workers - 1) / workers;
  std::vector<std::jthread> threads;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(queries.size(), w * chunk);
    const std::size_t end = std::min(queries.size(), begin + chunk);
    threads.emplace_back(run, begin, end);
  }
  run(0, std::min(queries.size(), chunk));
}

std::vector<double> Oracle::EvaluateBatch(std::span<const Subset> queries) {
  if (queries.empty()) Fail(ErrorCode::kInvalidArgument, "empty query batch");
  std::vector<double> values(queries.size());
  EvaluateInto(queries, values);
  ledger_.RecordRound(static_cast<std::int64_t>(queries.size()));
  return values;
}

void Oracle::EvaluateStreaming(std::size_t count, std::size_t chunk,
                               const std::function<void(std::size_t, Subset&)>& fill,
                               const std::function<void(std::size_t, double)>& take) {
  if (count == 0) Fail(ErrorCode::kInvalidArgument, "empty query batch");
  chunk = std::max<std::size_t>(1, std::min(chunk, count));
  // Slots are refilled in place so their storage is reused across chunks.
  std::vector<Subset> pending(chunk);
  std::vector<double> values(chunk);
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    for (std::size_t i = begin; i < end; ++i) fill(i, pending[i - begin]);
    EvaluateInto(std::span<const Subset>(pending).first(end - begin),
                 std::span<double>(values).first(end - begin));
    for (std::size_t i = begin; i < end; ++i) take(i, values[i - begin]);
  }
  ledger_.RecordRound(static_cast<std::int64_t>(count));
}

std::vector<double> Oracle::BatchMarginals(const Subset& base,
                                           std::span<const ElementId> candidates,
                                           double base_value) {
  std::vector<Subset> queries;
  queries.reserve(candidates.size());
  for (ElementId x : candidates) queries.push_back(base.With(x));
  std::vector<double> values = EvaluateBatch(queries);
  for (double& v : values) v -= base_value;
  return values;
}

MarginalBatch Oracle::BatchMarginalsWithBase(const Subset& base,
                                             std::span<const ElementId> candidates) {
  std::vector<Subset> queries;
  queries.reserve(candidates.size() + 1);
  queries.push_back(base);
  for (ElementId x : candidates) queries.push_back(base.With(x));
  std::vector<double> values = EvaluateBatch(queries);
  MarginalBatch out;
  out.base_value = values[0];
  out.marginals.assign(values.begin() + 1, values.end());
  for (double& v : out.marginals) v -= out.base_value;
  return out;
}

}  // namespace submax
