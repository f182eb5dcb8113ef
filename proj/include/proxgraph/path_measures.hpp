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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/linalg.hpp"
#include "proxgraph/oracles.hpp"
#include "proxgraph/proximity.hpp"

namespace proxgraph {

/// Number of ordered selections of k items out of n.
inline double arrangements(int n, int k) {
  double a = 1.0;
  for (int i = 0; i < k; ++i) a *= n - i;
  return a;
}

/// Weight bound below which every off-diagonal path accessibility of an
/// n-vertex graph with edge multiplicity at most m stays below 1. It is the
/// positive root of sum_{k=1}^{n-1} A(n-2, k-1) (eps m)^k = 1, the path
/// accessibility between two vertices of the complete multigraph.
inline double epsilon0(int n, int m) {
  if (n < 2 || m < 1) throw PreconditionError("epsilon0 needs n >= 2 and m >= 1");
  Polynomial p(n, 0.0);
  for (int k = 1; k <= n - 1; ++k) p[k] = arrangements(n - 2, k - 1);
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (poly_eval(p, mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) / m;
}

/// Residual of the defining equation at eps, for verification.
inline double epsilon0_residual(int n, int m, double eps) {
  double s = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    s += arrangements(n - 2, k - 1) * std::pow(eps * m, k);
  }
  return s - 1.0;
}

struct PathOptions {
  enum class Diagonal { cycles_and_trivial, trivial_only };
  // Undirected cycles of length >= 2 counted in both orientations or once.
  enum class CycleOrientation { both, once };

  Diagonal diagonal = Diagonal::cycles_and_trivial;
  CycleOrientation orientation = CycleOrientation::both;
  int max_order = 16;
};

namespace detail {

inline void stamp_path_regime(const WeightedMultigraph& g, ProximityMatrix& p) {
  if (g.order() < 2) return;
  const double e0 = epsilon0(g.order(), std::max(1, g.max_multiplicity()));
  p.epsilon0 = e0;
  p.within_regime = g.max_weight() < e0;
}

}  // namespace detail

/// Total weight of simple paths between every pair of vertices. The
/// diagonal is 1 plus the total weight of simple cycles through the vertex
/// (or just 1, per options). Paths are accumulated over vertex subsets, so
/// the cost is O(2^n n^2) per source vertex.
inline ProximityMatrix path_accessibility(const WeightedMultigraph& g,
                                          const PathOptions& options = {}) {
  const int n = g.order();
  if (n > options.max_order) {
    throw CapExceeded("path accessibility capped at " +
                      std::to_string(options.max_order) + " vertices");
  }
  const Matrix e = weight_matrix(g);
  Matrix squares = Matrix::Zero(n, n);
  Vector loops = Vector::Zero(n);
  for (const Edge& edge : g.edges()) {
    if (edge.is_loop()) {
      loops(edge.tail) += edge.weight;
    } else {
      squares(edge.tail, edge.head) += edge.weight * edge.weight;
      if (!g.is_directed()) squares(edge.head, edge.tail) += edge.weight * edge.weight;
    }
  }
  const bool undirected = !g.is_directed();
  const double orientation_factor =
      undirected && options.orientation == PathOptions::CycleOrientation::once ? 0.5
                                                                               : 1.0;

  ProximityMatrix result;
  result.measure = MeasureKind::paths;
  result.values = Matrix::Zero(n, n);
  const std::uint32_t full = std::uint32_t{1} << n;
  std::vector<double> dp(static_cast<std::size_t>(full) * n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dp.begin(), dp.end(), 0.0);
    dp[(std::size_t{1} << s) * n + s] = 1.0;
    std::vector<CompensatedSum> reach(n);
    CompensatedSum long_cycles;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (!(mask >> s & 1U)) continue;
      const int popcount = __builtin_popcount(mask);
      for (Vertex v = 0; v < n; ++v) {
        const double w = dp[static_cast<std::size_t>(mask) * n + v];
        if (w == 0.0) continue;
        if (v != s) {
          reach[v].add(w);
          const bool counts = undirected ? popcount >= 3 : popcount >= 2;
          if (counts && e(v, s) > 0.0) long_cycles.add(w * e(v, s));
        }
        for (Vertex u = 0; u < n; ++u) {
          if ((mask >> u & 1U) || e(v, u) == 0.0) continue;
          dp[static_cast<std::size_t>(mask | std::uint32_t{1} << u) * n + u] += w * e(v, u);
        }
      }
    }
    for (Vertex j = 0; j < n; ++j) {
      if (j != s) result.values(s, j) = reach[j].value();
    }
    if (options.diagonal == PathOptions::Diagonal::trivial_only) {
      result.values(s, s) = 1.0;
      continue;
    }
    CompensatedSum cycles;
    cycles.add(loops(s));
    if (undirected) {
      for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        // Ordered pairs of distinct parallel edges between s and v.
        cycles.add(orientation_factor * (e(s, v) * e(s, v) - squares(s, v)));
      }
    }
    cycles.add(orientation_factor * long_cycles.value());
    result.values(s, s) = 1.0 + cycles.value();
  }
  detail::stamp_path_regime(g, result);
  return result;
}

struct ReliabilityOptions {
  std::size_t max_paths = 20;
};

/// Probability that some path between i and j survives when each edge is
/// intact with probability equal to its weight. Evaluated by
/// inclusion-exclusion over the simple paths, where the joint survival of a
/// set of paths is the weight of the union of their edge sets. Terms with
/// equal unions are merged before evaluation.
inline double connection_reliability_pair(const WeightedMultigraph& g, Vertex i,
                                          Vertex j,
                                          const ReliabilityOptions& options = {}) {
  if (i == j) return 1.0;
  const auto paths = oracle::enum_simple_paths(g, i, j);
  if (paths.size() > options.max_paths) {
    throw CapExceeded(std::to_string(paths.size()) + " paths between " +
                      std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " exceed the inclusion-exclusion cap of " +
                      std::to_string(options.max_paths));
  }
  // Coefficients of prod_r (1 - x_r) with x_R x_S = x_{R u S}.
  std::map<std::uint64_t, long long> terms{{0, 1}};
  for (const auto& path : paths) {
    std::uint64_t edges = 0;
    for (std::size_t e : path.edges) edges |= std::uint64_t{1} << e;
    const auto snapshot = terms;
    for (const auto& [set, coeff] : snapshot) {
      auto& slot = terms[set | edges];
      slot -= coeff;
      if (slot == 0) terms.erase(set | edges);
    }
  }
  std::vector<double> contributions;
  contributions.reserve(terms.size());
  for (const auto& [set, coeff] : terms) {
    if (set == 0) continue;
    double w = 1.0;
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (set >> e & 1U) w *= g.edges()[e].weight;
    }
    contributions.push_back(-static_cast<double>(coeff) * w);
  }
  return sorted_sum(std::move(contributions));
}

inline ProximityMatrix connection_reliability(const WeightedMultigraph& g,
                                              const ReliabilityOptions& options = {}) {
  if (g.size() > 64) {
    throw CapExceeded("connection reliability supports at most 64 edges");
  }
  for (const Edge& e : g.edges()) {
    if (e.weight > 1.0) {
      throw PreconditionError("edge weights must be probabilities in [0, 1]");
    }
  }
  const int n = g.order();
  ProximityMatrix result;
  result.measure = MeasureKind::reliability;
  result.values = Matrix::Identity(n, n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j || (!g.is_directed() && j < i)) continue;
      result.values(i, j) = connection_reliability_pair(g, i, j, options);
      if (!g.is_directed()) result.values(j, i) = result.values(i, j);
    }
  }
  detail::stamp_path_regime(g, result);
  return result;
}

}  // namespace proxgraph
