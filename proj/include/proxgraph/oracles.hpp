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

// Exponential-time exact references. Every closed-form kernel in the library
// is validated against one of these on small instances; none of them is used
// by a kernel it checks.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/linalg.hpp"

namespace proxgraph::oracle {

struct OracleCaps {
  int max_forest_order = 8;
  std::size_t max_state_edges = 16;
};

/// Product of the weights of the chosen edges; 1 for the empty subgraph.
inline double subgraph_weight(const WeightedMultigraph& g,
                              std::span<const std::size_t> edge_ids) {
  double w = 1.0;
  for (std::size_t e : edge_ids) w *= g.edges()[e].weight;
  return w;
}

struct PathRecord {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
  double weight = 1.0;
};

inline double total_weight(const std::vector<PathRecord>& records) {
  std::vector<double> terms;
  terms.reserve(records.size());
  for (const auto& r : records) terms.push_back(r.weight);
  return sorted_sum(std::move(terms));
}

namespace detail {

// (edge id, other endpoint) lists. An undirected loop appears once.
inline std::vector<std::vector<std::pair<std::size_t, Vertex>>> incidence(
    const WeightedMultigraph& g) {
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> out(g.order());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edges()[e];
    out[edge.tail].emplace_back(e, edge.head);
    if (!g.is_directed() && !edge.is_loop()) out[edge.head].emplace_back(e, edge.tail);
  }
  return out;
}

class PathSearch {
 public:
  PathSearch(const WeightedMultigraph& g, Vertex source, Vertex target,
             bool cycles)
      : g_(g),
        inc_(incidence(g)),
        source_(source),
        target_(target),
        cycles_(cycles),
        on_path_(g.order(), false),
        edge_used_(g.size(), false) {}

  std::vector<PathRecord> run() {
    on_path_[source_] = true;
    current_.vertices.push_back(source_);
    extend(source_, 1.0);
    return std::move(found_);
  }

 private:
  void extend(Vertex v, double weight) {
    for (const auto& [e, w] : inc_[v]) {
      if (edge_used_[e]) continue;
      const double next = weight * g_.edges()[e].weight;
      if (w == target_ && (cycles_ || w != source_)) {
        PathRecord rec = current_;
        rec.vertices.push_back(w);
        rec.edges.push_back(e);
        rec.weight = next;
        found_.push_back(std::move(rec));
        continue;
      }
      if (on_path_[w]) continue;
      on_path_[w] = true;
      edge_used_[e] = true;
      current_.vertices.push_back(w);
      current_.edges.push_back(e);
      extend(w, next);
      current_.edges.pop_back();
      current_.vertices.pop_back();
      edge_used_[e] = false;
      on_path_[w] = false;
    }
  }

  const WeightedMultigraph& g_;
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> inc_;
  Vertex source_;
  Vertex target_;
  bool cycles_;
  std::vector<bool> on_path_;
  std::vector<bool> edge_used_;
  PathRecord current_;
  std::vector<PathRecord> found_;
};

}  // namespace detail

/// All simple paths from i to j (distinct vertices; parallel edges give
/// distinct paths). For i == j the only path is the trivial one.
inline std::vector<PathRecord> enum_simple_paths(const WeightedMultigraph& g,
                                                 Vertex i, Vertex j) {
  if (i == j) return {PathRecord{{i}, {}, 1.0}};
  return detail::PathSearch(g, i, j, false).run();
}

/// Simple cycles through i: pairwise-distinct edges, pairwise-distinct
/// intermediate vertices. An undirected cycle of length >= 2 shows up once
/// per orientation; a loop at i shows up once.
inline std::vector<PathRecord> enum_simple_cycles(const WeightedMultigraph& g,
                                                  Vertex i) {
  return detail::PathSearch(g, i, i, true).run();
}

/// Total weight of routes (walks) of each length 0..max_length from i to j,
/// by extending walks one edge at a time along the edge list.
inline std::vector<double> enum_routes(const WeightedMultigraph& g, Vertex i,
                                       Vertex j, int max_length) {
  const int n = g.order();
  std::vector<double> totals;
  std::vector<double> frontier(n, 0.0);
  frontier[i] = 1.0;
  for (int len = 0; len <= max_length; ++len) {
    totals.push_back(frontier[j]);
    std::vector<double> next(n, 0.0);
    for (const Edge& e : g.edges()) {
      next[e.head] += frontier[e.tail] * e.weight;
      if (!g.is_directed() && !e.is_loop()) next[e.tail] += frontier[e.head] * e.weight;
    }
    frontier = std::move(next);
  }
  return totals;
}

/// Weights of spanning rooted forests grouped by edge count k = 0..n-v:
/// totals[k] is the weight of F_k, matrices[k](i,j) the weight of F_k^{ij}
/// (j in the tree rooted at i).
struct ForestCensus {
  int order = 0;
  int component_count = 0;
  std::vector<double> totals;
  std::vector<Matrix> matrices;

  int max_edges() const { return order - component_count; }
  double total() const {
    CompensatedSum s;
    for (double t : totals) s.add(t);
    return s.value();
  }
  Matrix pair_total() const {
    Matrix m = Matrix::Zero(order, order);
    for (const auto& q : matrices) m += q;
    return m;
  }
};

namespace detail {

class ForestEnumerator {
 public:
  explicit ForestEnumerator(const WeightedMultigraph& g) : n_(g.order()) {
    for (const Edge& e : g.edges()) {
      if (!e.is_loop()) edges_.push_back(e);
    }
    parent_.resize(n_);
    size_.assign(n_, 1);
    for (int v = 0; v < n_; ++v) parent_[v] = v;
    const int max_k = n_ - components(g).count();
    totals_.resize(max_k + 1);
    pairs_.assign(max_k + 1, std::vector<CompensatedSum>(n_ * n_));
  }

  ForestCensus run() {
    grow(0, 0, 1.0);
    ForestCensus census;
    census.order = n_;
    census.component_count = n_ - static_cast<int>(totals_.size()) + 1;
    for (std::size_t k = 0; k < totals_.size(); ++k) {
      census.totals.push_back(totals_[k].value());
      Matrix m(n_, n_);
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) m(i, j) = pairs_[k][i * n_ + j].value();
      }
      census.matrices.push_back(std::move(m));
    }
    return census;
  }

 private:
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Each call is one acyclic edge set; every root choice is accounted for
  // by multiplying tree sizes.
  void grow(std::size_t start, int k, double weight) {
    record(k, weight);
    for (std::size_t e = start; e < edges_.size(); ++e) {
      int a = find(edges_[e].tail);
      int b = find(edges_[e].head);
      if (a == b) continue;
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      grow(e + 1, k + 1, weight * edges_[e].weight);
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

  void record(int k, double weight) {
    roots_.resize(n_);
    double roots_product = 1.0;
    for (int v = 0; v < n_; ++v) {
      roots_[v] = find(v);
      if (roots_[v] == v) roots_product *= size_[v];
    }
    totals_[k].add(weight * roots_product);
    auto& pairs = pairs_[k];
    for (int i = 0; i < n_; ++i) {
      const double w = weight * roots_product / size_[roots_[i]];
      for (int j = 0; j < n_; ++j) {
        if (roots_[j] == roots_[i]) pairs[i * n_ + j].add(w);
      }
    }
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> roots_;
  std::vector<CompensatedSum> totals_;
  std::vector<std::vector<CompensatedSum>> pairs_;
};

}  // namespace detail

inline ForestCensus enum_rooted_forests(const WeightedMultigraph& g,
                                        const OracleCaps& caps = {}) {
  if (g.is_directed()) {
    throw PreconditionError("forest census is defined for undirected graphs");
  }
  if (g.order() > caps.max_forest_order) {
    throw CapExceeded("forest census capped at " +
                      std::to_string(caps.max_forest_order) + " vertices");
  }
  return detail::ForestEnumerator(g).run();
}

/// Probability that i reaches j when every edge survives independently with
/// probability equal to its weight, summed over all 2^|E| states.
inline double reliability_by_states(const WeightedMultigraph& g, Vertex i,
                                    Vertex j, const OracleCaps& caps = {}) {
  const auto& edges = g.edges();
  if (edges.size() > caps.max_state_edges) {
    throw CapExceeded("state enumeration capped at " +
                      std::to_string(caps.max_state_edges) + " edges");
  }
  for (const Edge& e : edges) {
    if (e.weight > 1.0) {
      throw PreconditionError("edge weights must be probabilities in [0, 1]");
    }
  }
  if (i == j) return 1.0;
  const int n = g.order();
  const std::uint64_t states = std::uint64_t{1} << edges.size();
  CompensatedSum total;
  std::vector<bool> reached(n);
  for (std::uint64_t state = 0; state < states; ++state) {
    double prob = 1.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      prob *= (state >> e & 1U) ? edges[e].weight : 1.0 - edges[e].weight;
    }
    if (prob == 0.0) continue;
    std::fill(reached.begin(), reached.end(), false);
    reached[i] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(state >> e & 1U)) continue;
        const Edge& edge = edges[e];
        if (reached[edge.tail] && !reached[edge.head]) {
          reached[edge.head] = changed = true;
        } else if (!g.is_directed() && reached[edge.head] && !reached[edge.tail]) {
          reached[edge.tail] = changed = true;
        }
      }
    }
    if (reached[j]) total.add(prob);
  }
  return total.value();
}

}  // namespace proxgraph::oracle
