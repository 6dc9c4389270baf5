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

#ifndef SUBMAX_OBJECTIVES_H_
#define SUBMAX_OBJECTIVES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oracle.h"

namespace submax {

// Dense n x n similarity matrix, symmetrized on construction by averaging
// s[i][j] and s[j][i].
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  // Throws kInvalidArgument if `row_major` is not n*n finite values.
  SimilarityMatrix(int n, std::vector<double> row_major);

  int n() const { return n_; }
  double operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const double> row(int i) const {
    return std::span<const double>(values_).subspan(static_cast<std::size_t>(i) * n_,
                                                    n_);
  }
  // Negative entries are legal but void the nonnegativity of the image and
  // movie objectives.
  bool has_negative() const { return has_negative_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
  bool has_negative_ = false;
};

struct Edge {
  ElementId u;
  ElementId v;
  double w;
};

// Undirected graph with nonnegative edge weights.
class WeightedGraph {
 public:
  struct Neighbor {
    ElementId node;
    double w;
  };

  WeightedGraph() = default;
  // Throws kInvalidArgument on self loops, repeated pairs, ids out of range or
  // negative / non-finite weights.
  WeightedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(ElementId u) const {
    return std::span<const Neighbor>(adjacency_).subspan(
        offsets_[static_cast<std::size_t>(u)],
        offsets_[static_cast<std::size_t>(u) + 1] - offsets_[static_cast<std::size_t>(u)]);
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// f(S) = sum of weights[x] over x in S.
class ModularObjective : public Objective {
 public:
  explicit ModularObjective(std::vector<double> weights) : weights_(std::move(weights)) {}
  int n() const override { return static_cast<int>(weights_.size()); }
  std::string name() const override { return "modular"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  std::vector<double> weights_;
};

// f(S) = number of universe items covered by the sets indexed by S.
// Monotone submodular.
class CoverageObjective : public Objective {
 public:
  CoverageObjective(int universe_size, std::vector<std::vector<int>> covers);
  int n() const override { return static_cast<int>(masks_.size()); }
  std::string name() const override { return "coverage"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> masks_;
};

// Wraps an arbitrary callable; used for counterexamples and ad-hoc oracles.
class FunctionObjective : public Objective {
 public:
  FunctionObjective(int n, std::string name, std::function<double(const Subset&)> fn)
      : n_(n), name_(std::move(name)), fn_(std::move(fn)) {}
  int n() const override { return n_; }
  std::string name() const override { return name_; }

 protected:
  double Value(const Subset& s) const override { return fn_(s); }

 private:
  int n_;
  std::string name_;
  std::function<double(const Subset&)> fn_;
};

// Image summarization: sum over all i of max_{j in S} s[i][j], minus
// (1/n) * sum over i, j in S of s[i][j]. The max over an empty S is 0.
class ImageObjective : public Objective {
 public:
  explicit ImageObjective(SimilarityMatrix m) : m_(std::move(m)) {}
  int n() const override { return m_.n(); }
  std::string name() const override { return "image"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  SimilarityMatrix m_;
};

// Movie recommendation: sum over i in N, j in S of s[i][j], minus
// lambda * sum over i, j in S of s[i][j].
class MovieObjective : public Objective {
 public:
  MovieObjective(SimilarityMatrix m, double lambda);
  int n() const override { return m_.n(); }
  std::string name() const override { return "movie"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  SimilarityMatrix m_;
  double lambda_;
  std::vector<double> column_sums_;
};

// Revenue maximization: sum over i not in S of sqrt(sum over j in S of
// w[i][j]).
class RevenueObjective : public Objective {
 public:
  explicit RevenueObjective(WeightedGraph g) : g_(std::move(g)) {}
  int n() const override { return g_.n(); }
  std::string name() const override { return "revenue"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  WeightedGraph g_;
};

// Weighted cut: total weight of edges with exactly one endpoint in S.
class CutObjective : public Objective {
 public:
  explicit CutObjective(WeightedGraph g) : g_(std::move(g)) {}
  int n() const override { return g_.n(); }
  std::string name() const override { return "synthetic-cut"; }

 protected:
  double Value(const Subset& s) const override;

 private:
  WeightedGraph g_;
};

enum class InstanceKind { kImage, kMovie, kRevenue, kSyntheticCut };

// Throws kUnknownName.
InstanceKind ParseInstanceKind(std::string_view name);
std::string_view InstanceKindName(InstanceKind kind);
bool UsesSimilarity(InstanceKind kind);

struct Instance {
  InstanceKind kind = InstanceKind::kSyntheticCut;
  std::variant<SimilarityMatrix, WeightedGraph> data;
  double lambda = 0.95;

  int n() const;
};

std::unique_ptr<Objective> MakeObjective(const Instance& instance);

struct SyntheticSpec {
  int n = 50;
  // Edge probability for graph kinds.
  double p = 0.1;
  // Feature dimension for similarity kinds.
  int dim = 16;
  double lambda = 0.95;
};

// Graph kinds: Erdos-Renyi G(n, p) with U(0,1) edge weights. Similarity
// kinds: cosine similarities of random vectors with U(0,1) coordinates, so
// every similarity lies in [0, 1]. Deterministic in `seed`.
Instance GenerateSynthetic(InstanceKind kind, const SyntheticSpec& spec,
                           std::uint64_t seed);

// Parses "n=300,p=0.01,dim=8,lambda=0.9"; omitted keys keep their defaults.
SyntheticSpec ParseSyntheticSpec(std::string_view text);

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_H_
