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

#include "io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "error.h"

namespace submax {
namespace {

[[noreturn]] void ParseError(const std::string& source, int line,
                             const std::string& reason) {
  Fail(ErrorCode::kParse, source + ":" + std::to_string(line) + ": " + reason);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view field, T& out) {
  if (field.empty()) return false;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

}  // namespace

SimilarityMatrix ParseSimilarityCsv(std::istream& in, const std::string& source) {
  std::vector<double> values;
  std::size_t width = 0;
  int rows = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitFields(trimmed);
    if (rows == 0) {
      width = fields.size();
    } else if (fields.size() != width) {
      ParseError(source, line_no,
                 "expected " + std::to_string(width) + " fields, found " +
                     std::to_string(fields.size()));
    }
    for (std::string_view field : fields) {
      double v = 0.0;
      if (!ParseNumber(field, v)) {
        ParseError(source, line_no, "not a number: '" + std::string(field) + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (static_cast<std::size_t>(rows) != width) {
    ParseError(source, line_no,
               "matrix has " + std::to_string(rows) + " rows but " +
                   std::to_string(width) + " columns");
  }
  try {
    return SimilarityMatrix(rows, std::move(values));
  } catch (const Error& e) {
    ParseError(source, line_no, e.what());
  }
}

SimilarityMatrix LoadSimilarityCsv(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSimilarityCsv(in, path);
}

WeightedGraph ParseEdgeList(std::istream& in, const std::string& source,
                            std::optional<int> node_count) {
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int max_id = -1;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitFields(trimmed);
    if (fields.size() != 3) ParseError(source, line_no, "expected u,v,w");
    Edge e{};
    if (!ParseNumber(fields[0], e.u) || !ParseNumber(fields[1], e.v)) {
      ParseError(source, line_no, "node ids must be integers");
    }
    if (!ParseNumber(fields[2], e.w)) {
      ParseError(source, line_no, "not a number: '" + std::string(fields[2]) + "'");
    }
    if (e.u < 0 || e.v < 0) ParseError(source, line_no, "negative node id");
    if (node_count && (e.u >= *node_count || e.v >= *node_count)) {
      ParseError(source, line_no, "node id out of range");
    }
    if (e.u == e.v) ParseError(source, line_no, "self loop");
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      ParseError(source, line_no, "edge weight must be finite and >= 0");
    }
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
    edge_line.push_back(line_no);
  }
  const int n = node_count.value_or(max_id + 1);
  // Duplicate pairs are the one invariant left to the graph constructor; find
  // the offending line ourselves so the message can name it.
  std::vector<std::pair<std::pair<ElementId, ElementId>, int>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    keyed.push_back({std::minmax(edges[i].u, edges[i].v), edge_line[i]});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      ParseError(source, std::max(keyed[i].second, keyed[i - 1].second),
                 "duplicate edge");
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph LoadEdgeList(const std::string& path, std::optional<int> node_count) {
  std::ifstream in = OpenOrThrow(path);
  return ParseEdgeList(in, path, node_count);
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void WriteSimilarityCsv(std::ostream& out, const SimilarityMatrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(m(i, j));
    }
    out << '\n';
  }
}

void WriteEdgeList(std::ostream& out, const WeightedGraph& g) {
  for (const Edge& e : g.edges()) {
    out << e.u << ',' << e.v << ',' << FormatDouble(e.w) << '\n';
  }
}

}  // namespace submax
