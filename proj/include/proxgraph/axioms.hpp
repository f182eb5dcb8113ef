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

// Checkers for the normative properties of proximity measures. Every
// checker scans all relevant vertex tuples, keeps the tightest one as the
// witness and classifies the result as holding strictly, holding only in
// the nonstrict form, or violated.
//
// A margin is the amount by which the required relation holds: a - b for
// a > b or a >= b, and -|a - b| for a = b.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/forest_measures.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/linalg.hpp"
#include "proxgraph/path_measures.hpp"
#include "proxgraph/proximity.hpp"
#include "proxgraph/walk_measures.hpp"

namespace proxgraph {

enum class Property {
  symmetry,
  nonnegativity,
  reversal,
  diagonal_maximality,
  triangle,
  metric,
  disconnection,
  connectivity,
  transit,
  monotonicity_1,
  monotonicity_2,
  monotonicity_3,
  doubly_stochastic,
  macrovertex,
};

inline constexpr std::array<Property, 14> kAllProperties = {
    Property::symmetry,       Property::nonnegativity,  Property::reversal,
    Property::diagonal_maximality, Property::triangle,  Property::metric,
    Property::disconnection,  Property::connectivity,   Property::transit,
    Property::monotonicity_1, Property::monotonicity_2, Property::monotonicity_3,
    Property::doubly_stochastic, Property::macrovertex,
};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::symmetry: return "symmetry";
    case Property::nonnegativity: return "nonnegativity";
    case Property::reversal: return "reversal";
    case Property::diagonal_maximality: return "diagonal-maximality";
    case Property::triangle: return "triangle";
    case Property::metric: return "metric";
    case Property::disconnection: return "disconnection";
    case Property::connectivity: return "connectivity";
    case Property::transit: return "transit";
    case Property::monotonicity_1: return "monotonicity-1";
    case Property::monotonicity_2: return "monotonicity-2";
    case Property::monotonicity_3: return "monotonicity-3";
    case Property::doubly_stochastic: return "doubly-stochastic";
    case Property::macrovertex: return "macrovertex";
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

inline bool is_monotonicity(Property p) {
  return p == Property::monotonicity_1 || p == Property::monotonicity_2 ||
         p == Property::monotonicity_3;
}

enum class Verdict { holds, holds_nonstrict, violated, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_nonstrict: return "holds-nonstrict";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

/// Weight increase of an existing edge, or insertion of a new edge k-t.
struct Perturbation {
  enum class Kind { increase_weight, add_edge };

  Kind kind = Kind::add_edge;
  Vertex k = 0;
  Vertex t = 0;
  double delta = 0.0;
  std::size_t edge_index = 0;  // increase_weight only

  static Perturbation increase(const WeightedMultigraph& g, std::size_t edge,
                               double delta) {
    const Edge& e = g.edges().at(edge);
    return {Kind::increase_weight, e.tail, e.head, delta, edge};
  }
  static Perturbation add(Vertex k, Vertex t, double weight) {
    return {Kind::add_edge, k, t, weight, 0};
  }

  WeightedMultigraph apply(const WeightedMultigraph& g) const {
    if (!(delta > 0.0)) throw InvalidGraph("perturbation increment must be positive");
    if (kind == Kind::increase_weight) return g.with_weight_increase(edge_index, delta);
    return g.with_edge({k, t, delta});
  }

  std::string describe() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s:%d:%d:%.12g",
                  kind == Kind::add_edge ? "add-edge" : "increase-weight", k + 1,
                  t + 1, delta);
    return buf;
  }
};

struct Witness {
  std::vector<Vertex> vertices;
  std::optional<Perturbation> perturbation;
  double margin = 0.0;
};

struct PropertyReport {
  Property property = Property::symmetry;
  std::string measure;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  double margin = std::numeric_limits<double>::infinity();
  double tolerance = 0.0;

  /// `<measure> <property> <verdict> <margin> [witness...]`, vertices 1-based.
  std::string serialize() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", margin == 0.0 ? 0.0 : margin);
    std::string line = measure + " " + std::string(to_string(property)) + " " +
                       std::string(to_string(verdict)) + " " + buf;
    if (witness) {
      if (!witness->vertices.empty()) {
        line += " vertices=";
        for (std::size_t a = 0; a < witness->vertices.size(); ++a) {
          if (a) line += ",";
          line += std::to_string(witness->vertices[a] + 1);
        }
      }
      if (witness->perturbation) line += " perturbation=" + witness->perturbation->describe();
    }
    return line;
  }
};

/// A proximity measure as seen by the checkers.
struct Measure {
  MeasureKind kind = MeasureKind::forests;
  std::string name;
  bool directed_ok = false;
  std::function<Matrix(const WeightedMultigraph&)> evaluate;
  // Matrix whose increments the monotonicity items are stated for.
  std::function<Matrix(const WeightedMultigraph&)> increment_part;
};

struct MeasureConfig {
  PathOptions paths;
  ReliabilityOptions reliability{4096};
  double tau = 1.0;
  std::optional<double> alpha;  // dense forests; default half the threshold
};

inline Measure make_measure(MeasureKind kind, const MeasureConfig& config = {}) {
  Measure m;
  m.kind = kind;
  m.name = std::string(to_string(kind));
  switch (kind) {
    case MeasureKind::paths:
      m.directed_ok = true;
      m.evaluate = [options = config.paths](const WeightedMultigraph& g) {
        return path_accessibility(g, options).values;
      };
      break;
    case MeasureKind::reliability:
      m.directed_ok = true;
      m.evaluate = [options = config.reliability](const WeightedMultigraph& g) {
        return connection_reliability(g, options).values;
      };
      break;
    case MeasureKind::routes:
      m.directed_ok = true;
      m.evaluate = [](const WeightedMultigraph& g) {
        return route_accessibility(g).values;
      };
      break;
    case MeasureKind::forests:
      m.evaluate = [tau = config.tau](const WeightedMultigraph& g) {
        return forest_accessibility(g, tau).values;
      };
      break;
    case MeasureKind::dense_forests:
      m.evaluate = [alpha = config.alpha](const WeightedMultigraph& g) {
        return dense_forest_accessibility(g, alpha ? *alpha : default_dense_alpha(g))
            .values;
      };
      m.increment_part = [](const WeightedMultigraph& g) { return laplacian_pinv(g); };
      break;
    case MeasureKind::laplacian_pinv:
      m.evaluate = [](const WeightedMultigraph& g) { return laplacian_pinv(g); };
      break;
  }
  if (!m.increment_part) m.increment_part = m.evaluate;
  return m;
}

struct Tolerances {
  double strict = 1e-12;    // strict inequalities need margin > strict * scale
  double nonstrict = 1e-12; // nonstrict ones accept margin >= -nonstrict * scale
  double equality = 1e-10;  // equalities accept |residual| <= equality * scale
  double zero = 1e-12;      // |p| <= zero * scale counts as 0
};

namespace detail {

enum class Relation { strict, nonstrict, equality, zero };

// Folds tuple margins into a verdict plus the worst witness.
class VerdictAccumulator {
 public:
  VerdictAccumulator(const Tolerances& tol, double scale)
      : tol_(tol), scale_(std::max(1.0, scale)) {}

  void add(std::vector<Vertex> tuple, double margin, Relation rel) {
    int status = 0;
    switch (rel) {
      case Relation::strict:
        if (margin < -tol_.nonstrict * scale_) status = 2;
        else if (margin <= tol_.strict * scale_) status = 1;
        break;
      case Relation::nonstrict:
        if (margin < -tol_.nonstrict * scale_) status = 2;
        break;
      case Relation::equality:
        if (margin < -tol_.equality * scale_) status = 2;
        break;
      case Relation::zero:
        if (margin < -tol_.zero * scale_) status = 2;
        break;
    }
    if (!seen_ || status > status_ || (status == status_ && margin < margin_)) {
      seen_ = true;
      status_ = status;
      margin_ = margin;
      tuple_ = std::move(tuple);
    }
  }

  double scale() const { return scale_; }

  PropertyReport finish(Property property, const std::string& measure,
                        std::optional<Perturbation> perturbation = std::nullopt) const {
    PropertyReport r;
    r.property = property;
    r.measure = measure;
    r.tolerance = tol_.strict * scale_;
    if (!seen_) return r;  // vacuous
    r.verdict = status_ == 2 ? Verdict::violated
                : status_ == 1 ? Verdict::holds_nonstrict
                               : Verdict::holds;
    r.margin = margin_;
    r.witness = Witness{tuple_, perturbation, margin_};
    return r;
  }

 private:
  Tolerances tol_;
  double scale_;
  bool seen_ = false;
  int status_ = 0;
  double margin_ = std::numeric_limits<double>::infinity();
  std::vector<Vertex> tuple_;
};

inline PropertyReport not_applicable(Property property, const Measure& m) {
  PropertyReport r;
  r.property = property;
  r.measure = m.name;
  r.verdict = Verdict::not_applicable;
  r.margin = 0.0;
  return r;
}

inline bool applicable(const Measure& m, const WeightedMultigraph& g) {
  return m.directed_ok || !g.is_directed();
}

}  // namespace detail

// Margins of single tuples. The checkers and the witness replay share them.
namespace margin {

inline double symmetry(const Matrix& p, Vertex i, Vertex j) {
  return -std::abs(p(i, j) - p(j, i));
}
inline double diagonal_maximality(const Matrix& p, Vertex i, Vertex j) {
  return std::min(p(i, i) - p(i, j), p(i, i) - p(j, i));
}
inline double triangle(const Matrix& p, Vertex i, Vertex j, Vertex k) {
  return p(i, i) - (p(i, j) + p(i, k) - p(j, k));
}
inline double transit(const Matrix& p, Vertex i, Vertex k, Vertex t) {
  return p(i, k) - p(i, t);
}
inline double monotonicity_1(const Matrix& dp, Vertex k, Vertex t, Vertex i,
                             Vertex j) {
  return i == k && j == t ? dp(k, t) : dp(k, t) - dp(i, j);
}
inline double monotonicity_2(const Matrix& dp, Vertex i, Vertex k, Vertex t) {
  return dp(i, t) - dp(i, k);
}
inline double monotonicity_3(const Matrix& dp, Vertex i1, Vertex i2) {
  return -dp(i1, i2);
}

}  // namespace margin

inline PropertyReport check_symmetry(const Measure& m, const WeightedMultigraph& g,
                                     const Tolerances& tol = {}) {
  if (!detail::applicable(m, g) || g.is_directed()) {
    return detail::not_applicable(Property::symmetry, m);
  }
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      acc.add({i, j}, margin::symmetry(p, i, j), detail::Relation::equality);
    }
  }
  return acc.finish(Property::symmetry, m.name);
}

inline PropertyReport check_nonnegativity(const Measure& m, const WeightedMultigraph& g,
                                          const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) return detail::not_applicable(Property::nonnegativity, m);
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < g.order(); ++j) {
      acc.add({i, j}, p(i, j), detail::Relation::nonstrict);
    }
  }
  return acc.finish(Property::nonnegativity, m.name);
}

/// Reversing every arc must transpose P. Meaningful for digraphs only.
inline PropertyReport check_reversal(const Measure& m, const WeightedMultigraph& g,
                                     const Tolerances& tol = {}) {
  if (!detail::applicable(m, g) || !g.is_directed()) {
    return detail::not_applicable(Property::reversal, m);
  }
  const Matrix p = m.evaluate(g);
  const Matrix r = m.evaluate(g.reversed());
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < g.order(); ++j) {
      acc.add({i, j}, -std::abs(r(i, j) - p(j, i)), detail::Relation::equality);
    }
  }
  return acc.finish(Property::reversal, m.name);
}

inline PropertyReport check_diagonal_maximality(const Measure& m,
                                                const WeightedMultigraph& g,
                                                const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) {
    return detail::not_applicable(Property::diagonal_maximality, m);
  }
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < g.order(); ++j) {
      if (i != j) acc.add({i, j}, margin::diagonal_maximality(p, i, j), detail::Relation::strict);
    }
  }
  return acc.finish(Property::diagonal_maximality, m.name);
}

/// p_ij + p_ik - p_jk <= p_ii for all triples, strictly when j = k != i.
inline PropertyReport check_triangle(const Measure& m, const WeightedMultigraph& g,
                                     const Tolerances& tol = {}) {
  if (!detail::applicable(m, g) || g.is_directed()) {
    return detail::not_applicable(Property::triangle, m);
  }
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  const int n = g.order();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      for (Vertex k = 0; k < n; ++k) {
        const auto rel = j == k && i != j ? detail::Relation::strict
                                          : detail::Relation::nonstrict;
        acc.add({i, j, k}, margin::triangle(p, i, j, k), rel);
      }
    }
  }
  return acc.finish(Property::triangle, m.name);
}

/// d_ij = p_ii + p_jj - p_ij - p_ji.
inline Matrix metric_transform(const Matrix& p) {
  const auto n = p.rows();
  Matrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = p(i, i) + p(j, j) - p(i, j) - p(j, i);
  }
  return d;
}

/// Metric axioms on D: zero diagonal, positivity of distinct vertices
/// inside a component, symmetry, and the triangle inequality on all triples.
inline PropertyReport check_metric_axioms(const Matrix& d, const ComponentPartition& parts,
                                          const std::string& measure = "matrix",
                                          const Tolerances& tol = {}) {
  detail::VerdictAccumulator acc(tol, max_abs(d));
  const auto n = static_cast<int>(d.rows());
  for (Vertex i = 0; i < n; ++i) {
    acc.add({i}, -std::abs(d(i, i)), detail::Relation::equality);
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      acc.add({i, j}, -std::abs(d(i, j) - d(j, i)), detail::Relation::equality);
      if (parts.same(i, j)) acc.add({i, j}, d(i, j), detail::Relation::strict);
      for (Vertex k = 0; k < n; ++k) {
        acc.add({i, j, k}, d(i, k) + d(k, j) - d(i, j), detail::Relation::nonstrict);
      }
    }
  }
  return acc.finish(Property::metric, measure);
}

inline PropertyReport check_metric(const Measure& m, const WeightedMultigraph& g,
                                   const Tolerances& tol = {}) {
  if (!detail::applicable(m, g) || g.is_directed()) {
    return detail::not_applicable(Property::metric, m);
  }
  return check_metric_axioms(metric_transform(m.evaluate(g)), components(g), m.name, tol);
}

/// p_ij = 0 exactly when j is unreachable from i.
inline PropertyReport check_disconnection(const Measure& m, const WeightedMultigraph& g,
                                          const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) return detail::not_applicable(Property::disconnection, m);
  const Matrix p = m.evaluate(g);
  const auto reach = reachability(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < g.order(); ++j) {
      if (reach[i][j]) {
        acc.add({i, j}, p(i, j) - tol.zero * acc.scale(), detail::Relation::strict);
      } else {
        acc.add({i, j}, -std::abs(p(i, j)), detail::Relation::zero);
      }
    }
  }
  return acc.finish(Property::disconnection, m.name);
}

/// Positivity is transitive; for undirected graphs P is block diagonal with
/// strictly positive blocks along the components.
inline PropertyReport check_connectivity(const Measure& m, const WeightedMultigraph& g,
                                         const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) return detail::not_applicable(Property::connectivity, m);
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  const double zero = tol.zero * acc.scale();
  const int n = g.order();
  if (!g.is_directed()) {
    const auto parts = components(g);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (parts.same(i, j)) {
          acc.add({i, j}, p(i, j) - zero, detail::Relation::strict);
        } else {
          acc.add({i, j}, -std::abs(p(i, j)), detail::Relation::zero);
        }
      }
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (p(i, j) <= zero) continue;
      for (Vertex k = 0; k < n; ++k) {
        if (p(j, k) > zero) acc.add({i, j, k}, p(i, k) - zero, detail::Relation::strict);
      }
    }
  }
  return acc.finish(Property::connectivity, m.name);
}

/// Triples (i, k, t), i != k != t, with a path from i to k and every path
/// from i to t passing through k.
inline std::vector<std::array<Vertex, 3>> transit_triples(const WeightedMultigraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  const auto reach = reachability(g);
  for (Vertex k = 0; k < g.order(); ++k) {
    const auto avoiding = reachability(g, k);
    for (Vertex i = 0; i < g.order(); ++i) {
      if (i == k || !reach[i][k]) continue;
      for (Vertex t = 0; t < g.order(); ++t) {
        if (t == k || t == i || avoiding[i][t]) continue;
        out.push_back({i, k, t});
      }
    }
  }
  return out;
}

inline PropertyReport check_transit(const Measure& m, const WeightedMultigraph& g,
                                    const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) return detail::not_applicable(Property::transit, m);
  const Matrix p = m.evaluate(g);
  detail::VerdictAccumulator acc(tol, max_abs(p));
  for (const auto& [i, k, t] : transit_triples(g)) {
    acc.add({i, k, t}, margin::transit(p, i, k, t), detail::Relation::strict);
  }
  return acc.finish(Property::transit, m.name);
}

/// Vertices i != k that reach k while every path from i to t passes
/// through k, evaluated on the unperturbed graph.
inline std::vector<Vertex> monotonicity_hypothesis(const WeightedMultigraph& g, Vertex k,
                                                   Vertex t) {
  std::vector<Vertex> out;
  if (k == t) return out;
  const auto reach = reachability(g);
  const auto avoiding = reachability(g, k);
  for (Vertex i = 0; i < g.order(); ++i) {
    if (i != k && reach[i][k] && !avoiding[i][t]) out.push_back(i);
  }
  return out;
}

/// Items 1-3 of monotonicity for one perturbation.
inline std::array<PropertyReport, 3> check_monotonicity(const Measure& m,
                                                        const WeightedMultigraph& g,
                                                        const Perturbation& pert,
                                                        const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) {
    return {detail::not_applicable(Property::monotonicity_1, m),
            detail::not_applicable(Property::monotonicity_2, m),
            detail::not_applicable(Property::monotonicity_3, m)};
  }
  const Matrix before = m.increment_part(g);
  const Matrix after = m.increment_part(pert.apply(g));
  const Matrix dp = after - before;
  const double scale = std::max(max_abs(before), max_abs(after));
  const Vertex k = pert.k;
  const Vertex t = pert.t;
  const int n = g.order();

  detail::VerdictAccumulator item1(tol, scale);
  item1.add({k, t}, margin::monotonicity_1(dp, k, t, k, t), detail::Relation::strict);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const bool same_pair = g.is_directed()
                                 ? (i == k && j == t)
                                 : ((i == k && j == t) || (i == t && j == k));
      if (same_pair) continue;
      item1.add({i, j}, margin::monotonicity_1(dp, k, t, i, j), detail::Relation::strict);
    }
  }

  const auto hyp = monotonicity_hypothesis(g, k, t);
  detail::VerdictAccumulator item2(tol, scale);
  detail::VerdictAccumulator item3(tol, scale);
  for (Vertex i : hyp) {
    item2.add({i, k, t}, margin::monotonicity_2(dp, i, k, t), detail::Relation::strict);
    for (Vertex i2 : hyp) {
      item3.add({i, i2}, margin::monotonicity_3(dp, i, i2), detail::Relation::nonstrict);
    }
  }
  auto r1 = item1.finish(Property::monotonicity_1, m.name, pert);
  auto r2 = item2.finish(Property::monotonicity_2, m.name, pert);
  auto r3 = item3.finish(Property::monotonicity_3, m.name, pert);
  return {r1, r2, r3};
}

inline PropertyReport check_doubly_stochastic(const Matrix& p,
                                              const std::string& measure = "matrix",
                                              const Tolerances& tol = {}) {
  detail::VerdictAccumulator acc(tol, 1.0);
  const auto n = static_cast<int>(p.rows());
  for (Vertex i = 0; i < n; ++i) {
    acc.add({i}, -std::abs(p.row(i).sum() - 1.0), detail::Relation::equality);
    acc.add({i}, -std::abs(p.col(i).sum() - 1.0), detail::Relation::equality);
    for (Vertex j = 0; j < n; ++j) acc.add({i, j}, p(i, j), detail::Relation::nonstrict);
  }
  return acc.finish(Property::doubly_stochastic, measure);
}

inline PropertyReport check_doubly_stochastic(const Measure& m, const WeightedMultigraph& g,
                                              const Tolerances& tol = {}) {
  if (!detail::applicable(m, g)) {
    return detail::not_applicable(Property::doubly_stochastic, m);
  }
  return check_doubly_stochastic(m.evaluate(g), m.name, tol);
}

/// True when every vertex outside d has the same total edge weight to each
/// member of d.
inline bool is_macrovertex(const WeightedMultigraph& g, const std::vector<Vertex>& d,
                           double rel_tol = 1e-12) {
  const Matrix e = weight_matrix(g);
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : d) {
    if (v < 0 || v >= g.order()) return false;
    inside[v] = true;
  }
  for (Vertex k = 0; k < g.order(); ++k) {
    if (inside[k]) continue;
    for (Vertex i : d) {
      if (rel_diff(e(i, k), e(d.front(), k), 1.0) > rel_tol ||
          rel_diff(e(k, i), e(k, d.front()), 1.0) > rel_tol) {
        return false;
      }
    }
  }
  return true;
}

/// p_ik = p_jk for i, j in d and k outside d, both on g and after the edges
/// inside d are reweighted and a new edge inside d appears.
inline PropertyReport check_macrovertex(const Measure& m, const WeightedMultigraph& g,
                                        std::vector<Vertex> d,
                                        const Tolerances& tol = {1e-12, 1e-12, 1e-12, 1e-12}) {
  if (d.empty() || !is_macrovertex(g, d)) {
    throw InvalidGraph("vertex set is not a macrovertex of the graph");
  }
  if (!detail::applicable(m, g)) return detail::not_applicable(Property::macrovertex, m);
  std::sort(d.begin(), d.end());
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : d) inside[v] = true;

  auto edges = g.edges();
  for (Edge& e : edges) {
    if (inside[e.tail] && inside[e.head]) e.weight *= 1.5;
  }
  WeightedMultigraph reweighted(g.order(), g.is_directed(), std::move(edges));
  if (d.size() >= 2) reweighted = reweighted.with_edge({d[0], d[1], 0.25});

  const Matrix p = m.evaluate(g);
  const Matrix q = m.evaluate(reweighted);
  detail::VerdictAccumulator acc(tol, std::max(max_abs(p), max_abs(q)));
  for (Vertex k = 0; k < g.order(); ++k) {
    if (inside[k]) continue;
    for (Vertex i : d) {
      acc.add({i, d.front(), k}, -std::abs(p(i, k) - p(d.front(), k)),
              detail::Relation::equality);
      acc.add({i, k}, -std::abs(q(i, k) - p(i, k)), detail::Relation::equality);
    }
  }
  return acc.finish(Property::macrovertex, m.name);
}

/// Single-graph checker for every property except monotonicity and
/// macrovertex, which need extra input.
inline PropertyReport check_property(const Measure& m, const WeightedMultigraph& g,
                                     Property property, const Tolerances& tol = {}) {
  switch (property) {
    case Property::symmetry: return check_symmetry(m, g, tol);
    case Property::nonnegativity: return check_nonnegativity(m, g, tol);
    case Property::reversal: return check_reversal(m, g, tol);
    case Property::diagonal_maximality: return check_diagonal_maximality(m, g, tol);
    case Property::triangle: return check_triangle(m, g, tol);
    case Property::metric: return check_metric(m, g, tol);
    case Property::disconnection: return check_disconnection(m, g, tol);
    case Property::connectivity: return check_connectivity(m, g, tol);
    case Property::transit: return check_transit(m, g, tol);
    case Property::doubly_stochastic: return check_doubly_stochastic(m, g, tol);
    default: break;
  }
  throw PreconditionError(std::string(to_string(property)) +
                          " needs a perturbation or a vertex set");
}

/// Perturbations that keep every weight below `weight_cap` and every edge
/// multiplicity at most `max_multiplicity`: each edge is raised by half its
/// remaining slack, each pair with spare multiplicity gets a new edge of
/// weight half the cap. Without a cap, weights grow by half and new edges
/// weigh 1.
inline std::vector<Perturbation> candidate_perturbations(const WeightedMultigraph& g,
                                                         double weight_cap,
                                                         int max_multiplicity) {
  std::vector<Perturbation> out;
  const bool capped = std::isfinite(weight_cap);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const double w = g.edges()[e].weight;
    if (g.edges()[e].is_loop()) continue;
    const double delta = capped ? 0.5 * (weight_cap - w) : 0.5 * w;
    if (delta > 0.0) out.push_back(Perturbation::increase(g, e, delta));
  }
  const double fresh = capped ? 0.5 * weight_cap : 1.0;
  for (Vertex k = 0; k < g.order(); ++k) {
    for (Vertex t = 0; t < g.order(); ++t) {
      if (k == t || (!g.is_directed() && t < k)) continue;
      if (g.multiplicity(k, t) < max_multiplicity) out.push_back(Perturbation::add(k, t, fresh));
    }
  }
  return out;
}

/// Recomputes the margin of a witness on its own, without scanning.
inline double replay_margin(const Measure& m, const WeightedMultigraph& g,
                            const PropertyReport& report) {
  if (!report.witness) throw PreconditionError("report carries no witness");
  const auto& w = *report.witness;
  const auto& v = w.vertices;
  if (is_monotonicity(report.property)) {
    if (!w.perturbation) throw PreconditionError("monotonicity witness needs a perturbation");
    const auto& pert = *w.perturbation;
    const Matrix dp = m.increment_part(pert.apply(g)) - m.increment_part(g);
    switch (report.property) {
      case Property::monotonicity_1:
        return margin::monotonicity_1(dp, pert.k, pert.t, v.at(0), v.at(1));
      case Property::monotonicity_2:
        return margin::monotonicity_2(dp, v.at(0), pert.k, pert.t);
      default:
        return margin::monotonicity_3(dp, v.at(0), v.at(1));
    }
  }
  const Matrix p = m.evaluate(g);
  switch (report.property) {
    case Property::symmetry: return margin::symmetry(p, v.at(0), v.at(1));
    case Property::nonnegativity: return p(v.at(0), v.at(1));
    case Property::diagonal_maximality:
      return margin::diagonal_maximality(p, v.at(0), v.at(1));
    case Property::triangle: return margin::triangle(p, v.at(0), v.at(1), v.at(2));
    case Property::transit: return margin::transit(p, v.at(0), v.at(1), v.at(2));
    default: break;
  }
  return check_property(m, g, report.property).margin;
}

}  // namespace proxgraph
