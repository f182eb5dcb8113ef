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

// Small named graphs with known proximity orderings and exact values.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "proxgraph/axioms.hpp"
#include "proxgraph/forest_measures.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/path_measures.hpp"
#include "proxgraph/walk_measures.hpp"

namespace proxgraph::examples {

// Vertex roles shared by the three example graphs.
inline constexpr Vertex kI = 0;
inline constexpr Vertex kK = 1;
inline constexpr Vertex kT = 2;
inline constexpr Vertex kU = 3;  // first example only

/// Star i-k, i-t, i-u plus the edge u-t.
inline WeightedMultigraph star_with_chord(double w = 1.0) {
  return WeightedMultigraph::undirected(4, {{kI, kK, w}, {kI, kT, w}, {kI, kU, w}, {kU, kT, w}});
}

/// i reaches k along two vertex-disjoint 3-edge paths and t along two
/// 3-edge paths that share their first edge.
inline WeightedMultigraph shared_first_edge(double w = 1.0) {
  return WeightedMultigraph::undirected(
      10, {{0, 3, w}, {3, 4, w}, {4, kK, w}, {0, 5, w}, {5, 6, w}, {6, kK, w},
           {0, 7, w}, {7, 8, w}, {8, kT, w}, {7, 9, w}, {9, kT, w}});
}

/// Edges i-k, i-t and a 3-cycle through t.
inline WeightedMultigraph pendant_triangle(double w = 1.0) {
  return WeightedMultigraph::undirected(
      5, {{kI, kK, w}, {kI, kT, w}, {kT, 3, w}, {3, 4, w}, {4, kT, w}});
}

enum class Order { less, equal, greater };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::less: return "<";
    case Order::equal: return "=";
    case Order::greater: return ">";
  }
  return "?";
}

/// One stated relation p(a) ? p(b) between two entries of one measure.
struct OrderingCheck {
  std::string figure;
  MeasureKind measure = MeasureKind::paths;
  std::array<Vertex, 2> lhs{};
  std::array<Vertex, 2> rhs{};
  Order expected = Order::equal;
  double lhs_value = 0.0;
  double rhs_value = 0.0;

  Order observed(double rel_tol = 1e-12) const {
    const double scale = std::max({std::abs(lhs_value), std::abs(rhs_value), 1e-300});
    const double diff = lhs_value - rhs_value;
    if (std::abs(diff) <= rel_tol * scale) return Order::equal;
    return diff < 0.0 ? Order::less : Order::greater;
  }
  bool passed() const { return observed() == expected; }

  std::string describe() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s p%d%d=%.12g %s p%d%d=%.12g (observed %s)",
                  figure.c_str(), std::string(proxgraph::to_string(measure)).c_str(),
                  lhs[0] + 1, lhs[1] + 1, lhs_value, to_string(expected), rhs[0] + 1,
                  rhs[1] + 1, rhs_value, to_string(observed()));
    return buf;
  }
};

/// Values each measure is evaluated at: path weights at half epsilon0, route
/// weights at half the 1/(m(n-1)) bound, forest weights 1, alpha at half the
/// dense-forest threshold.
inline Matrix evaluate_example(MeasureKind kind, const WeightedMultigraph& unit) {
  const int n = unit.order();
  switch (kind) {
    case MeasureKind::paths:
      return path_accessibility(scale_weights(unit, 0.5 * epsilon0(n, 1))).values;
    case MeasureKind::reliability:
      return connection_reliability(scale_weights(unit, 0.5 * epsilon0(n, 1))).values;
    case MeasureKind::routes:
      return route_accessibility(scale_weights(unit, 0.5 / (n - 1.0))).values;
    case MeasureKind::forests:
      return forest_accessibility(unit).values;
    case MeasureKind::dense_forests:
      return dense_forest_accessibility(unit).values;
    case MeasureKind::laplacian_pinv:
      return laplacian_pinv(unit);
  }
  return {};
}

inline std::vector<OrderingCheck> run_figure_examples() {
  struct Spec {
    const char* figure;
    WeightedMultigraph graph;
    MeasureKind measure;
    std::array<Vertex, 2> lhs;
    std::array<Vertex, 2> rhs;
    Order expected;
  };
  const auto f1 = star_with_chord();
  const auto f2 = shared_first_edge();
  const auto f3 = pendant_triangle();
  const std::array<Vertex, 2> ik{kI, kK};
  const std::array<Vertex, 2> it{kI, kT};
  const std::array<Vertex, 2> iu{kI, kU};
  const std::vector<Spec> specs = {
      {"star-with-chord", f1, MeasureKind::paths, ik, it, Order::less},
      {"star-with-chord", f1, MeasureKind::reliability, ik, it, Order::less},
      {"star-with-chord", f1, MeasureKind::routes, ik, it, Order::less},
      {"star-with-chord", f1, MeasureKind::forests, ik, it, Order::equal},
      {"star-with-chord", f1, MeasureKind::forests, ik, iu, Order::equal},
      {"star-with-chord", f1, MeasureKind::dense_forests, ik, it, Order::equal},
      {"star-with-chord", f1, MeasureKind::dense_forests, ik, iu, Order::equal},
      {"shared-first-edge", f2, MeasureKind::paths, ik, it, Order::equal},
      {"shared-first-edge", f2, MeasureKind::reliability, ik, it, Order::greater},
      {"shared-first-edge", f2, MeasureKind::routes, ik, it, Order::less},
      {"shared-first-edge", f2, MeasureKind::forests, ik, it, Order::greater},
      {"shared-first-edge", f2, MeasureKind::dense_forests, ik, it, Order::greater},
      {"pendant-triangle", f3, MeasureKind::paths, it, ik, Order::equal},
      {"pendant-triangle", f3, MeasureKind::reliability, it, ik, Order::equal},
      {"pendant-triangle", f3, MeasureKind::routes, it, ik, Order::greater},
      {"pendant-triangle", f3, MeasureKind::forests, it, ik, Order::less},
      {"pendant-triangle", f3, MeasureKind::dense_forests, it, ik, Order::less},
  };
  std::vector<OrderingCheck> out;
  for (const auto& s : specs) {
    const Matrix p = evaluate_example(s.measure, s.graph);
    out.push_back({s.figure, s.measure, s.lhs, s.rhs, s.expected, p(s.lhs[0], s.lhs[1]),
                   p(s.rhs[0], s.rhs[1])});
  }
  return out;
}

/// An exact value pinned for one entry of a computed matrix.
struct ValueCheck {
  std::string label;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 1e-12;

  bool passed() const { return std::abs(expected - observed) <= tolerance; }
  std::string describe() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s expected %.12g observed %.12g", label.c_str(),
                  expected, observed);
    return buf;
  }
};

/// Edge {1,2} plus an isolated vertex 3, before and after adding edge {1,3}.
inline std::pair<WeightedMultigraph, WeightedMultigraph> merge_counterexample() {
  const auto before = WeightedMultigraph::undirected(3, {{0, 1, 1.0}});
  return {before, before.with_edge({0, 2, 1.0})};
}

/// Change of L+ when the isolated vertex is attached. The entry for the new
/// edge drops below the entry for the old one.
inline std::vector<ValueCheck> merge_counterexample_checks() {
  const auto [before, after] = merge_counterexample();
  const Matrix d = laplacian_pinv(after) - laplacian_pinv(before);
  return {
      {"dL+ (1,3)", -1.0 / 9.0, d(0, 2)},
      {"dL+ (1,2)", 5.0 / 36.0, d(0, 1)},
      {"dL+ (2,3)", -4.0 / 9.0, d(1, 2)},
      {"dL+ (2,2)", 11.0 / 36.0, d(1, 1)},
  };
}

/// Complete multidigraph (m arcs per ordered pair, each of weight eps)
/// with every arc into `sink_free` removed.
inline WeightedMultigraph complete_digraph_without_in_arcs(int n, Vertex sink_free,
                                                           double eps, int m = 1) {
  std::vector<Edge> arcs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b || b == sink_free) continue;
      for (int p = 0; p < m; ++p) arcs.push_back({a, b, eps});
    }
  }
  return WeightedMultigraph::directed(n, std::move(arcs));
}

/// p_ii = 1 and p_ij = eps m / (1 - (n-2) eps m), which is 1/2 at eps = 1/n.
inline std::vector<ValueCheck> route_worked_checks(int n) {
  const auto g = complete_digraph_without_in_arcs(n, 0, 1.0 / n);
  const Matrix p = route_accessibility(g).values;
  std::vector<ValueCheck> out;
  const std::string tag = "n=" + std::to_string(n) + " ";
  out.push_back({tag + "p11", 1.0, p(0, 0)});
  for (Vertex j = 1; j < n; ++j) {
    out.push_back({tag + "p1" + std::to_string(j + 1), 0.5, p(0, j)});
  }
  return out;
}

}  // namespace proxgraph::examples
