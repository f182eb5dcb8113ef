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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/linalg.hpp"

namespace proxgraph {

/// Vertex ids are dense and 0-based.
using Vertex = int;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  double weight = 1.0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted multigraph or multidigraph. Parallel edges and loops are allowed,
/// weights are strictly positive. Immutable: every modification returns a
/// new graph. Undirected edges are stored once with tail <= head.
class WeightedMultigraph {
 public:
  WeightedMultigraph(int order, bool directed, std::vector<Edge> edges = {})
      : order_(order), directed_(directed), edges_(std::move(edges)) {
    if (order_ < 1) throw InvalidGraph("graph needs at least one vertex");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      Edge& edge = edges_[e];
      if (edge.tail < 0 || edge.tail >= order_ || edge.head < 0 ||
          edge.head >= order_) {
        throw InvalidGraph("edge " + std::to_string(e) +
                           " has an endpoint outside [0, " +
                           std::to_string(order_) + ")");
      }
      if (!(edge.weight > 0.0) || !std::isfinite(edge.weight)) {
        throw InvalidGraph("edge " + std::to_string(e) +
                           " has a nonpositive or non-finite weight");
      }
      if (!directed_ && edge.tail > edge.head) std::swap(edge.tail, edge.head);
    }
  }

  static WeightedMultigraph undirected(int order, std::vector<Edge> edges = {}) {
    return WeightedMultigraph(order, false, std::move(edges));
  }
  static WeightedMultigraph directed(int order, std::vector<Edge> edges = {}) {
    return WeightedMultigraph(order, true, std::move(edges));
  }

  int order() const { return order_; }
  bool is_directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  /// Greatest number of parallel edges (arcs) joining one pair of vertices;
  /// the paper's m. Pairs are ordered for digraphs.
  int max_multiplicity() const {
    std::map<std::pair<Vertex, Vertex>, int> count;
    int best = 0;
    for (const Edge& e : edges_) best = std::max(best, ++count[{e.tail, e.head}]);
    return best;
  }

  int multiplicity(Vertex a, Vertex b) const {
    if (!directed_ && a > b) std::swap(a, b);
    return static_cast<int>(std::count_if(
        edges_.begin(), edges_.end(),
        [&](const Edge& e) { return e.tail == a && e.head == b; }));
  }

  double max_weight() const {
    double w = 0.0;
    for (const Edge& e : edges_) w = std::max(w, e.weight);
    return w;
  }

  WeightedMultigraph with_edge(Edge edge) const {
    auto edges = edges_;
    edges.push_back(edge);
    return {order_, directed_, std::move(edges)};
  }

  WeightedMultigraph with_weight_increase(std::size_t edge_index,
                                          double delta) const {
    if (edge_index >= edges_.size()) throw InvalidGraph("no such edge");
    auto edges = edges_;
    edges[edge_index].weight += delta;
    return {order_, directed_, std::move(edges)};
  }

  WeightedMultigraph reversed() const {
    auto edges = edges_;
    for (Edge& e : edges) std::swap(e.tail, e.head);
    return {order_, directed_, std::move(edges)};
  }

  friend bool operator==(const WeightedMultigraph&,
                         const WeightedMultigraph&) = default;

 private:
  int order_;
  bool directed_;
  std::vector<Edge> edges_;
};

/// E: entry (i,j) is the total weight of edges (arcs) from i to j. An
/// undirected edge contributes to both (i,j) and (j,i); a loop once.
inline Matrix weight_matrix(const WeightedMultigraph& g) {
  Matrix e = Matrix::Zero(g.order(), g.order());
  for (const Edge& edge : g.edges()) {
    e(edge.tail, edge.head) += edge.weight;
    if (!g.is_directed() && !edge.is_loop()) e(edge.head, edge.tail) += edge.weight;
  }
  return e;
}

/// Laplacian of an undirected multigraph: off-diagonal -e_ij, diagonal the
/// total weight of incident non-loop edges, so every row sums to zero.
inline Matrix laplacian(const WeightedMultigraph& g) {
  if (g.is_directed()) {
    throw PreconditionError("the Laplacian is defined for undirected graphs only");
  }
  Matrix l = Matrix::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    l(e.tail, e.head) -= e.weight;
    l(e.head, e.tail) -= e.weight;
    l(e.tail, e.tail) += e.weight;
    l(e.head, e.head) += e.weight;
  }
  return l;
}

/// Partition of the vertex set by (undirected) connectivity. Components are
/// numbered by their smallest vertex; members are sorted.
struct ComponentPartition {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> members;

  int count() const { return static_cast<int>(members.size()); }
  bool same(Vertex a, Vertex b) const { return component_of[a] == component_of[b]; }
  std::size_t size_of(Vertex v) const { return members[component_of[v]].size(); }
};

inline ComponentPartition components(const WeightedMultigraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  ComponentPartition parts;
  parts.component_of.assign(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (parts.component_of[s] >= 0) continue;
    const int id = parts.count();
    parts.members.emplace_back();
    std::deque<Vertex> queue{s};
    parts.component_of[s] = id;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      parts.members[id].push_back(v);
      for (Vertex w : adj[v]) {
        if (parts.component_of[w] < 0) {
          parts.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(parts.members[id].begin(), parts.members[id].end());
  }
  return parts;
}

/// J-bar: 1/|V_i| on pairs inside one component, 0 elsewhere.
inline Matrix averaging_matrix(const ComponentPartition& parts) {
  const auto n = static_cast<Eigen::Index>(parts.component_of.size());
  Matrix j = Matrix::Zero(n, n);
  for (const auto& block : parts.members) {
    const double value = 1.0 / static_cast<double>(block.size());
    for (Vertex a : block) {
      for (Vertex b : block) j(a, b) = value;
    }
  }
  return j;
}

inline Matrix averaging_matrix(const WeightedMultigraph& g) {
  return averaging_matrix(components(g));
}

inline WeightedMultigraph scale_weights(const WeightedMultigraph& g, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InvalidGraph("weight scale factor must be positive");
  }
  auto edges = g.edges();
  for (Edge& e : edges) e.weight *= tau;
  return {g.order(), g.is_directed(), std::move(edges)};
}

/// Undirected graph with the same weight matrix as a digraph whose E is
/// symmetric. Each unordered pair becomes one edge of the total weight.
inline WeightedMultigraph symmetrize(const WeightedMultigraph& g,
                                     double rel_tol = 1e-12) {
  if (!g.is_directed()) return g;
  const Matrix e = weight_matrix(g);
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i; j < n; ++j) {
      if (rel_diff(e(i, j), e(j, i), 1.0) > rel_tol) {
        throw InvalidGraph("weight matrix is not symmetric at (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (e(i, j) > 0.0) edges.push_back({i, j, e(i, j)});
    }
  }
  return WeightedMultigraph::undirected(n, std::move(edges));
}

inline bool has_symmetric_weights(const WeightedMultigraph& g,
                                  double rel_tol = 1e-12) {
  if (!g.is_directed()) return true;
  const Matrix e = weight_matrix(g);
  return max_abs(e - e.transpose()) <= rel_tol * std::max(1.0, max_abs(e));
}

/// reach(i,j) is true iff there is a path from i to j, optionally ignoring
/// one vertex (it may still be the source). Every vertex reaches itself.
inline std::vector<std::vector<bool>> reachability(const WeightedMultigraph& g,
                                                   Vertex avoid = -1) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out(n);
  for (const Edge& e : g.edges()) {
    out[e.tail].push_back(e.head);
    if (!g.is_directed()) out[e.head].push_back(e.tail);
  }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (v == avoid && v != s) continue;
      for (Vertex w : out[v]) {
        if (w == avoid && w != s) {
          reach[s][w] = true;  // reached, but do not pass through
          continue;
        }
        if (!reach[s][w]) {
          reach[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace proxgraph
