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

// Seeded random multigraphs for property sweeps. Each regime fixes the
// weight range a family of measures is stated for.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "proxgraph/graph.hpp"
#include "proxgraph/path_measures.hpp"

namespace proxgraph {

enum class Regime {
  paths,           // weights in [0.5, 0.95] * epsilon0(n, m)
  reliability,     // same weights, at most 12 edges
  routes,          // weights in [0.5, 0.95] / (m (n - 1))
  route_triangle,  // weights in [0.5, 0.95] / (m n), undirected
  forests,         // real weights in [0.5, 2], undirected
  forests_integer, // weights in {1, 2, 3}, undirected
};

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::paths: return "paths";
    case Regime::reliability: return "reliability";
    case Regime::routes: return "routes";
    case Regime::route_triangle: return "route-triangle";
    case Regime::forests: return "forests";
    case Regime::forests_integer: return "forests-integer";
  }
  return "?";
}

struct CorpusOptions {
  int count = 200;
  int min_order = 2;
  int max_order = 7;
  int max_multiplicity = 2;
  double min_density = 0.15;
  double max_density = 0.75;
  std::size_t reliability_max_edges = 12;
};

struct CorpusGraph {
  WeightedMultigraph graph;
  int multiplicity = 1;  // the m of the family the graph was drawn from
  double weight_cap = std::numeric_limits<double>::infinity();
};

/// Strict upper bound on edge weights of an n-vertex graph in the regime.
inline double regime_weight_cap(Regime r, int n, int m) {
  switch (r) {
    case Regime::paths:
    case Regime::reliability:
      return n >= 2 ? epsilon0(n, m) : 1.0;
    case Regime::routes:
      return n >= 2 ? 1.0 / (m * (n - 1.0)) : 1.0;
    case Regime::route_triangle:
      return 1.0 / (m * static_cast<double>(n));
    default:
      return std::numeric_limits<double>::infinity();
  }
}

inline bool regime_is_undirected(Regime r) {
  return r == Regime::route_triangle || r == Regime::forests ||
         r == Regime::forests_integer;
}

inline std::vector<CorpusGraph> make_corpus(Regime regime, std::uint64_t seed,
                                            const CorpusOptions& options = {}) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(regime));
  std::uniform_int_distribution<int> order_dist(options.min_order, options.max_order);
  std::uniform_int_distribution<int> mult_dist(1, options.max_multiplicity);
  std::uniform_real_distribution<double> density_dist(options.min_density,
                                                      options.max_density);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> small_int(1, 3);

  std::vector<CorpusGraph> out;
  out.reserve(options.count);
  while (static_cast<int>(out.size()) < options.count) {
    const int n = order_dist(rng);
    const int m = mult_dist(rng);
    const bool directed = regime_is_undirected(regime) ? false : coin(rng);
    const double density = density_dist(rng);
    const double cap = regime_weight_cap(regime, n, m);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = directed ? 0 : a + 1; b < n; ++b) {
        if (a == b) continue;
        for (int p = 0; p < m; ++p) {
          if (unit(rng) < density) edges.push_back({a, b, 1.0});
        }
      }
    }
    if (regime == Regime::reliability) {
      std::shuffle(edges.begin(), edges.end(), rng);
      if (edges.size() > options.reliability_max_edges) {
        edges.resize(options.reliability_max_edges);
      }
    }
    for (Edge& e : edges) {
      switch (regime) {
        case Regime::forests: e.weight = 0.5 + 1.5 * unit(rng); break;
        case Regime::forests_integer: e.weight = small_int(rng); break;
        default: e.weight = (0.5 + 0.45 * unit(rng)) * cap; break;
      }
    }
    out.push_back({WeightedMultigraph(n, directed, std::move(edges)), m, cap});
  }
  return out;
}

}  // namespace proxgraph
