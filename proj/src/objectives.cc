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

#include "objectives.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "error.h"
#include "rng.h"

namespace submax {

SimilarityMatrix::SimilarityMatrix(int n, std::vector<double> row_major)
    : n_(n), values_(std::move(row_major)) {
  if (n < 0 || values_.size() != static_cast<std::size_t>(n) * n) {
    Fail(ErrorCode::kInvalidArgument, "similarity matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double& a = values_[static_cast<std::size_t>(i) * n + j];
      double& b = values_[static_cast<std::size_t>(j) * n + i];
      if (!std::isfinite(a) || !std::isfinite(b)) {
        Fail(ErrorCode::kInvalidArgument, "non-finite similarity entry");
      }
      const double mean = a == b ? a : (a + b) / 2;
      a = mean;
      b = mean;
      if (mean < 0) has_negative_ = true;
    }
  }
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative node count");
  std::set<std::pair<ElementId, ElementId>> seen;
  std::vector<std::size_t> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      Fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) Fail(ErrorCode::kInvalidArgument, "self loop");
    if (!std::isfinite(e.w) || e.w < 0) {
      Fail(ErrorCode::kInvalidArgument, "edge weight must be finite and >= 0");
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      Fail(ErrorCode::kInvalidArgument, "duplicate edge");
    }
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int u = 0; u < n; ++u) {
    offsets_[static_cast<std::size_t>(u) + 1] =
        offsets_[static_cast<std::size_t>(u)] + degree[static_cast<std::size_t>(u)];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.w};
    adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.w};
  }
}

double ModularObjective::Value(const Subset& s) const {
  double total = 0.0;
  for (ElementId x : s.members()) total += weights_[static_cast<std::size_t>(x)];
  return total;
}

CoverageObjective::CoverageObjective(int universe_size,
                                     std::vector<std::vector<int>> covers)
    : words_((static_cast<std::size_t>(universe_size) + 63) / 64) {
  masks_.reserve(covers.size());
  for (const auto& items : covers) {
    std::vector<std::uint64_t> mask(words_, 0);
    for (int item : items) {
      if (item < 0 || item >= universe_size) {
        Fail(ErrorCode::kInvalidArgument, "coverage item out of range");
      }
      mask[static_cast<std::size_t>(item) >> 6] |= std::uint64_t{1} << (item & 63);
    }
    masks_.push_back(std::move(mask));
  }
}

double CoverageObjective::Value(const Subset& s) const {
  // Small universes fit on the stack.
  constexpr std::size_t kInline = 8;
  std::uint64_t inline_words[kInline] = {};
  std::vector<std::uint64_t> heap_words;
  std::uint64_t* acc = inline_words;
  if (words_ > kInline) {
    heap_words.assign(words_, 0);
    acc = heap_words.data();
  }
  for (ElementId x : s.members()) {
    const auto& mask = masks_[static_cast<std::size_t>(x)];
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= mask[w];
  }
  int covered = 0;
  for (std::size_t w = 0; w < words_; ++w) covered += std::popcount(acc[w]);
  return covered;
}

double ImageObjective::Value(const Subset& s) const {
  if (s.empty()) return 0.0;
  const auto members = s.members();
  double coverage = 0.0;
  for (int i = 0; i < m_.n(); ++i) {
    const auto row = m_.row(i);
    double best = row[static_cast<std::size_t>(members[0])];
    for (ElementId j : members) best = std::max(best, row[static_cast<std::size_t>(j)]);
    coverage += best;
  }
  double penalty = 0.0;
  for (ElementId i : members) {
    const auto row = m_.row(i);
    for (ElementId j : members) penalty += row[static_cast<std::size_t>(j)];
  }
  return coverage - penalty / m_.n();
}

MovieObjective::MovieObjective(SimilarityMatrix m, double lambda)
    : m_(std::move(m)), lambda_(lambda), column_sums_(static_cast<std::size_t>(m_.n()), 0.0) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "lambda must lie in [0, 1]");
  }
  for (int i = 0; i < m_.n(); ++i) {
    const auto row = m_.row(i);
    for (int j = 0; j < m_.n(); ++j) column_sums_[static_cast<std::size_t>(j)] += row[j];
  }
}

double MovieObjective::Value(const Subset& s) const {
  double relevance = 0.0;
  double redundancy = 0.0;
  for (ElementId i : s.members()) {
    relevance += column_sums_[static_cast<std::size_t>(i)];
    const auto row = m_.row(i);
    for (ElementId j : s.members()) redundancy += row[static_cast<std::size_t>(j)];
  }
  return relevance - lambda_ * redundancy;
}

double RevenueObjective::Value(const Subset& s) const {
  if (s.empty()) return 0.0;
  std::vector<double> incoming(static_cast<std::size_t>(g_.n()), 0.0);
  for (ElementId j : s.members()) {
    for (const auto& nb : g_.neighbors(j)) incoming[static_cast<std::size_t>(nb.node)] += nb.w;
  }
  double total = 0.0;
  for (int i = 0; i < g_.n(); ++i) {
    if (!s.contains(i) && incoming[static_cast<std::size_t>(i)] > 0) {
      total += std::sqrt(incoming[static_cast<std::size_t>(i)]);
    }
  }
  return total;
}

double CutObjective::Value(const Subset& s) const {
  double total = 0.0;
  for (ElementId u : s.members()) {
    for (const auto& nb : g_.neighbors(u)) {
      if (!s.contains(nb.node)) total += nb.w;
    }
  }
  return total;
}

InstanceKind ParseInstanceKind(std::string_view name) {
  if (name == "image") return InstanceKind::kImage;
  if (name == "movie") return InstanceKind::kMovie;
  if (name == "revenue") return InstanceKind::kRevenue;
  if (name == "synthetic-cut") return InstanceKind::kSyntheticCut;
  Fail(ErrorCode::kUnknownName, "unknown objective '" + std::string(name) + "'");
}

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kImage:
      return "image";
    case InstanceKind::kMovie:
      return "movie";
    case InstanceKind::kRevenue:
      return "revenue";
    case InstanceKind::kSyntheticCut:
      return "synthetic-cut";
  }
  return "?";
}

bool UsesSimilarity(InstanceKind kind) {
  return kind == InstanceKind::kImage || kind == InstanceKind::kMovie;
}

int Instance::n() const {
  return std::visit([](const auto& d) { return d.n(); }, data);
}

std::unique_ptr<Objective> MakeObjective(const Instance& instance) {
  if (UsesSimilarity(instance.kind) !=
      std::holds_alternative<SimilarityMatrix>(instance.data)) {
    Fail(ErrorCode::kInvalidArgument, "instance kind does not match its data");
  }
  switch (instance.kind) {
    case InstanceKind::kImage:
      return std::make_unique<ImageObjective>(std::get<SimilarityMatrix>(instance.data));
    case InstanceKind::kMovie:
      return std::make_unique<MovieObjective>(std::get<SimilarityMatrix>(instance.data),
                                              instance.lambda);
    case InstanceKind::kRevenue:
      return std::make_unique<RevenueObjective>(std::get<WeightedGraph>(instance.data));
    case InstanceKind::kSyntheticCut:
      return std::make_unique<CutObjective>(std::get<WeightedGraph>(instance.data));
  }
  Fail(ErrorCode::kInvalidArgument, "unhandled instance kind");
}

Instance GenerateSynthetic(InstanceKind kind, const SyntheticSpec& spec,
                           std::uint64_t seed) {
  if (spec.n < 1) Fail(ErrorCode::kInvalidArgument, "synthetic instance needs n >= 1");
  Rng rng(seed);
  Instance instance;
  instance.kind = kind;
  instance.lambda = spec.lambda;
  if (UsesSimilarity(kind)) {
    if (spec.dim < 1) Fail(ErrorCode::kInvalidArgument, "feature dimension must be >= 1");
    const auto n = static_cast<std::size_t>(spec.n);
    const auto dim = static_cast<std::size_t>(spec.dim);
    std::vector<double> features(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
      double norm = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double x = rng.UniformOpenUnit();
        features[i * dim + d] = x;
        norm += x * x;
      }
      norm = std::sqrt(norm);
      for (std::size_t d = 0; d < dim; ++d) features[i * dim + d] /= norm;
    }
    std::vector<double> s(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
          dot += features[i * dim + d] * features[j * dim + d];
        }
        s[i * n + j] = dot;
        s[j * n + i] = dot;
      }
    }
    instance.data = SimilarityMatrix(spec.n, std::move(s));
  } else {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
      Fail(ErrorCode::kInvalidArgument, "edge probability must lie in [0, 1]");
    }
    std::vector<Edge> edges;
    for (ElementId u = 0; u < spec.n; ++u) {
      for (ElementId v = u + 1; v < spec.n; ++v) {
        if (rng.UniformOpenUnit() < spec.p) edges.push_back({u, v, rng.UniformOpenUnit()});
      }
    }
    instance.data = WeightedGraph(spec.n, std::move(edges));
  }
  return instance;
}

SyntheticSpec ParseSyntheticSpec(std::string_view text) {
  SyntheticSpec spec;
  auto bad = [&](const std::string& why) {
    Fail(ErrorCode::kParse, "synthetic spec '" + std::string(text) + "': " + why);
  };
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) bad("expected key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    double number = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
    if (ec != std::errc() || ptr != value.data() + value.size()) bad("bad number");
    if (key == "n") {
      spec.n = static_cast<int>(number);
    } else if (key == "p") {
      spec.p = number;
    } else if (key == "dim") {
      spec.dim = static_cast<int>(number);
    } else if (key == "lambda") {
      spec.lambda = number;
    } else {
      bad("unknown key '" + std::string(key) + "'");
    }
  }
  return spec;
}

}  // namespace submax
