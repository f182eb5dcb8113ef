// Copyright 2026 The Proxgraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text edge lists:
//
//   # comment
//   undirected            (or: directed)
//   vertices 3
//   edge 1 2 0.5          (1-based endpoints, positive weight; repeatable)

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/graph.hpp"

namespace proxgraph {

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

template <typename T>
T parse_number(std::string_view word, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("cannot parse ") + what + " '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace detail

inline WeightedMultigraph parse_graph(std::istream& in) {
  std::optional<bool> directed;
  std::optional<int> order;
  std::vector<Edge> edges;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    const auto words = detail::split_words(text);
    if (words.empty()) continue;
    const auto key = words[0];
    if (key == "directed" || key == "undirected") {
      if (words.size() != 1) throw ParseError(line, "unexpected text after '" + std::string(key) + "'");
      if (directed) throw ParseError(line, "directedness declared twice");
      if (!edges.empty()) throw ParseError(line, "directedness must precede the edges");
      directed = key == "directed";
    } else if (key == "vertices") {
      if (words.size() != 2) throw ParseError(line, "expected 'vertices N'");
      if (order) throw ParseError(line, "vertex count declared twice");
      const int n = detail::parse_number<int>(words[1], line, "vertex count");
      if (n < 1) throw ParseError(line, "vertex count must be at least 1");
      order = n;
    } else if (key == "edge") {
      if (words.size() != 4) throw ParseError(line, "expected 'edge U V W'");
      if (!order) throw ParseError(line, "'vertices N' must precede the edges");
      const int u = detail::parse_number<int>(words[1], line, "endpoint");
      const int v = detail::parse_number<int>(words[2], line, "endpoint");
      const double w = detail::parse_number<double>(words[3], line, "weight");
      if (u < 1 || u > *order || v < 1 || v > *order) {
        throw ParseError(line, "endpoint out of range 1.." + std::to_string(*order));
      }
      if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line, "weight must be positive");
      edges.push_back({u - 1, v - 1, w});
    } else {
      throw ParseError(line, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!directed) throw ParseError(line + 1, "missing 'directed' or 'undirected'");
  if (!order) throw ParseError(line + 1, "missing 'vertices N'");
  return WeightedMultigraph(*order, *directed, std::move(edges));
}

inline WeightedMultigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

/// Inverse of parse_graph; weights are written with enough digits to read
/// back bit for bit.
inline std::string serialize_graph(const WeightedMultigraph& g) {
  std::string out = g.is_directed() ? "directed\n" : "undirected\n";
  out += "vertices " + std::to_string(g.order()) + "\n";
  char buf[96];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "edge %d %d %.17g\n", e.tail + 1, e.head + 1, e.weight);
    out += buf;
  }
  return out;
}

}  // namespace proxgraph
