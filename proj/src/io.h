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

// Plain-text instance formats.
//
//   similarity CSV: n lines of n comma-separated decimals, no header.
//   edge list:      one "u,v,w" line per edge, 0-based ids, no header.
//
// Parse errors carry "<source>:<line>: <reason>".

#ifndef SUBMAX_IO_H_
#define SUBMAX_IO_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "objectives.h"

namespace submax {

SimilarityMatrix ParseSimilarityCsv(std::istream& in, const std::string& source);
SimilarityMatrix LoadSimilarityCsv(const std::string& path);

// Node count is max id + 1 unless `node_count` is given.
WeightedGraph ParseEdgeList(std::istream& in, const std::string& source,
                            std::optional<int> node_count = std::nullopt);
WeightedGraph LoadEdgeList(const std::string& path,
                           std::optional<int> node_count = std::nullopt);

// Shortest round-trip decimal form of `value`.
std::string FormatDouble(double value);

void WriteSimilarityCsv(std::ostream& out, const SimilarityMatrix& m);
void WriteEdgeList(std::ostream& out, const WeightedGraph& g);

}  // namespace submax

#endif  // SUBMAX_IO_H_
