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
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "proxgraph/errors.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/linalg.hpp"
#include "proxgraph/proximity.hpp"

namespace proxgraph {

/// Convergence diagnostics for the route series sum_l E^l.
struct AdmissibilityReport {
  double spectral_radius = 0.0;  // estimate of |lambda_1| of E
  bool radius_converged = true;
  double gershgorin_bound = 0.0;  // largest row sum of E
  double max_weight = 0.0;
  int multiplicity = 0;
  int order = 1;
  double weight_bound = std::numeric_limits<double>::infinity();  // 1/(m(n-1))
  bool weight_constraint_satisfied = true;
  bool convergent = true;

  std::string diagnostic() const {
    char buf[512];
    if (convergent) {
      std::snprintf(buf, sizeof buf,
                    "route series converges: spectral radius %.12g, Gershgorin "
                    "bound %.12g",
                    spectral_radius, gershgorin_bound);
    } else {
      std::snprintf(buf, sizeof buf,
                    "route series diverges: spectral radius of E is %.12g >= 1 "
                    "(Gershgorin bound %.12g); the sufficient weight condition "
                    "max weight %.12g < 1/(m(n-1)) = %.12g with m=%d, n=%d %s",
                    spectral_radius, gershgorin_bound, max_weight, weight_bound,
                    multiplicity, order,
                    weight_constraint_satisfied ? "holds" : "is violated");
    }
    return buf;
  }
};

inline AdmissibilityReport check_admissibility(const WeightedMultigraph& g) {
  AdmissibilityReport r;
  const int n = g.order();
  const Matrix e = weight_matrix(g);
  r.order = n;
  r.max_weight = g.max_weight();
  r.multiplicity = g.max_multiplicity();
  r.gershgorin_bound = n == 0 ? 0.0 : e.rowwise().sum().maxCoeff();
  if (n >= 2 && r.multiplicity >= 1) {
    r.weight_bound = 1.0 / (r.multiplicity * (n - 1.0));
    r.weight_constraint_satisfied = r.max_weight < r.weight_bound;
  }
  if (g.size() == 0) {
    r.spectral_radius = 0.0;
    r.convergent = true;
    return r;
  }

  // Power iteration on E + I keeps every iterate positive, so the
  // Collatz-Wielandt ratios bracket the Perron root at every step.
  const Matrix b = e + Matrix::Identity(n, n);
  Vector x = Vector::Ones(n);
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  r.radius_converged = false;
  for (int it = 0; it < 200; ++it) {
    const Vector y = b * x;
    const Vector ratio = y.cwiseQuotient(x);
    lower = std::max(lower, ratio.minCoeff());
    upper = std::min(upper, ratio.maxCoeff());
    x = y / y.maxCoeff();
    if (upper - lower < 1e-10) {
      r.radius_converged = true;
      break;
    }
  }
  r.spectral_radius = std::min(upper - 1.0, r.gershgorin_bound);
  if (r.radius_converged) r.spectral_radius = std::min(0.5 * (lower + upper) - 1.0, r.spectral_radius);
  r.convergent = std::min(upper - 1.0, r.gershgorin_bound) < 1.0;
  if (r.radius_converged && lower - 1.0 >= 1.0) r.convergent = false;
  return r;
}

/// P = (I - E)^{-1}, the total weight of routes between every pair of
/// vertices. Solved per connected component.
inline ProximityMatrix route_accessibility(const WeightedMultigraph& g) {
  const auto report = check_admissibility(g);
  if (!report.convergent) throw DivergentSeries(report.diagnostic());
  const int n = g.order();
  const Matrix e = weight_matrix(g);
  const auto parts = components(g);
  ProximityMatrix result;
  result.measure = MeasureKind::routes;
  result.values = Matrix::Zero(n, n);
  for (const auto& block : parts.members) {
    const Matrix sub = gather(e, block);
    const auto s = static_cast<Eigen::Index>(block.size());
    const Matrix p = (Matrix::Identity(s, s) - sub)
                         .partialPivLu()
                         .solve(Matrix::Identity(s, s));
    scatter(result.values, block, p);
  }
  if (!g.is_directed()) {
    result.values = 0.5 * (result.values + result.values.transpose()).eval();
  }
  result.within_regime = report.weight_constraint_satisfied;
  return result;
}

/// Route accessibility after adding delta to the weight of arc (k, t):
/// P + h P[:,k] P[t,:] with h = delta / (1 - delta p_tk). The input is not
/// modified.
inline Matrix rank_one_update(const Matrix& p, Vertex k, Vertex t, double delta) {
  const double denom = 1.0 - delta * p(t, k);
  if (std::abs(denom) < 1e-12) {
    throw SingularUpdate("rank-one update denominator 1 - delta*p_tk vanishes");
  }
  const double h = delta / denom;
  return p + h * p.col(k) * p.row(t);
}

/// Same for an undirected edge {k, t}: one update per orientation, the
/// second applied to the result of the first. A loop is a single update.
inline Matrix edge_update(const Matrix& p, bool directed, Vertex k, Vertex t,
                          double delta) {
  Matrix out = rank_one_update(p, k, t, delta);
  if (!directed && k != t) out = rank_one_update(out, t, k, delta);
  return out;
}

/// Keeps route accessibility current under a stream of weight increments
/// and edge insertions, recomputing from scratch every `refresh_period`
/// updates to bound drift.
class RouteAccessibilityTracker {
 public:
  explicit RouteAccessibilityTracker(WeightedMultigraph g, int refresh_period = 32)
      : graph_(std::move(g)),
        values_(route_accessibility(graph_).values),
        refresh_period_(refresh_period) {}

  const WeightedMultigraph& graph() const { return graph_; }
  const Matrix& values() const { return values_; }
  int updates_since_refresh() const { return pending_; }

  void increase_weight(std::size_t edge_index, double delta) {
    const Edge& e = graph_.edges().at(edge_index);
    apply(graph_.with_weight_increase(edge_index, delta), e.tail, e.head, delta);
  }

  void add_edge(const Edge& edge) {
    apply(graph_.with_edge(edge), edge.tail, edge.head, edge.weight);
  }

 private:
  void apply(WeightedMultigraph next, Vertex k, Vertex t, double delta) {
    const auto report = check_admissibility(next);
    if (!report.convergent) throw DivergentSeries(report.diagnostic());
    Matrix updated = edge_update(values_, next.is_directed(), k, t, delta);
    graph_ = std::move(next);
    if (++pending_ >= refresh_period_) {
      values_ = route_accessibility(graph_).values;
      pending_ = 0;
    } else {
      values_ = std::move(updated);
    }
  }

  WeightedMultigraph graph_;
  Matrix values_;
  int refresh_period_;
  int pending_ = 0;
};

}  // namespace proxgraph
