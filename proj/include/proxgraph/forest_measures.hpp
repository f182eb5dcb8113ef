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

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "proxgraph/errors.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/linalg.hpp"
#include "proxgraph/proximity.hpp"

namespace proxgraph {

namespace detail {

inline void require_undirected(const WeightedMultigraph& g, const char* what) {
  if (g.is_directed()) {
    throw PreconditionError(std::string(what) + " is defined for undirected graphs only");
  }
}

inline Matrix symmetric_part(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace detail

/// Q(tau) = (I + tau L)^{-1}: entry (i,j) is the weight share of spanning
/// rooted forests (edges scaled by tau) in which j grows in a tree rooted
/// at i.
inline ProximityMatrix forest_accessibility(const WeightedMultigraph& g,
                                            double tau = 1.0) {
  detail::require_undirected(g, "forest accessibility");
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw PreconditionError("forest accessibility needs a finite tau >= 0");
  }
  const int n = g.order();
  ProximityMatrix result;
  result.measure = MeasureKind::forests;
  result.tau = tau;
  result.values = Matrix::Identity(n, n);
  if (tau == 0.0) return result;
  const Matrix l = laplacian(g);
  for (const auto& block : components(g).members) {
    if (block.size() == 1) continue;
    const auto s = static_cast<Eigen::Index>(block.size());
    const Matrix a = Matrix::Identity(s, s) + tau * gather(l, block);
    scatter(result.values, block,
            detail::symmetric_part(a.partialPivLu().solve(Matrix::Identity(s, s))));
  }
  return result;
}

/// Coefficients of det(I + tau L) (totals[k], the weight of spanning rooted
/// forests with k edges) and of adj(I + tau L) (matrices[k] = Q_k).
struct QkStack {
  std::vector<double> totals;
  std::vector<Matrix> matrices;

  int max_edges() const { return static_cast<int>(totals.size()) - 1; }

  Matrix adjugate_at(double tau) const {
    Matrix acc = Matrix::Zero(matrices.front().rows(), matrices.front().cols());
    double power = 1.0;
    for (const auto& q : matrices) {
      acc += power * q;
      power *= tau;
    }
    return acc;
  }
  double determinant_at(double tau) const { return poly_eval(totals, tau); }
};

namespace detail {

// Adjugate and determinant coefficients of I + tau L for one connected
// block: Q_0 = I, c_k = tr(L Q_{k-1}) / k, Q_k = c_k I - L Q_{k-1}.
inline void block_adjugate(const Matrix& l, Polynomial& det,
                           std::vector<Matrix>& adj) {
  const auto s = l.rows();
  det.assign(1, 1.0);
  adj.assign(1, Matrix::Identity(s, s));
  for (Eigen::Index k = 1; k < s; ++k) {
    const Matrix lq = l * adj.back();
    const double c = lq.trace() / static_cast<double>(k);
    det.push_back(c);
    adj.push_back(c * Matrix::Identity(s, s) - lq);
  }
}

}  // namespace detail

inline QkStack qk_decomposition(const WeightedMultigraph& g) {
  detail::require_undirected(g, "the Q_k decomposition");
  const int n = g.order();
  const Matrix l = laplacian(g);
  const auto parts = components(g);
  const int blocks = parts.count();
  std::vector<Polynomial> dets(blocks);
  std::vector<std::vector<Matrix>> adjs(blocks);
  for (int c = 0; c < blocks; ++c) {
    detail::block_adjugate(gather(l, parts.members[c]), dets[c], adjs[c]);
  }
  QkStack out;
  out.totals = {1.0};
  for (const auto& d : dets) out.totals = poly_multiply(out.totals, d);
  const std::size_t degree = out.totals.size();
  out.matrices.assign(degree, Matrix::Zero(n, n));
  for (int c = 0; c < blocks; ++c) {
    Polynomial others = {1.0};
    for (int o = 0; o < blocks; ++o) {
      if (o != c) others = poly_multiply(others, dets[o]);
    }
    const auto& block = parts.members[c];
    for (std::size_t a = 0; a < adjs[c].size(); ++a) {
      for (std::size_t b = 0; b < others.size(); ++b) {
        const Matrix term = others[b] * adjs[c][a];
        for (std::size_t x = 0; x < block.size(); ++x) {
          for (std::size_t y = 0; y < block.size(); ++y) {
            out.matrices[a + b](block[x], block[y]) += term(x, y);
          }
        }
      }
    }
  }
  return out;
}

/// Largest entrywise |Q(tau) - J| for each tau of the ladder.
inline std::vector<double> jbar_limit_check(const WeightedMultigraph& g,
                                            std::span<const double> ladder) {
  const Matrix j = averaging_matrix(g);
  std::vector<double> out;
  for (double tau : ladder) out.push_back(max_abs(forest_accessibility(g, tau).values - j));
  return out;
}

/// Moore-Penrose inverse of L as (L + J)^{-1} - J, per component.
inline Matrix laplacian_pinv(const WeightedMultigraph& g) {
  detail::require_undirected(g, "the Laplacian pseudoinverse");
  const int n = g.order();
  const Matrix l = laplacian(g);
  Matrix out = Matrix::Zero(n, n);
  for (const auto& block : components(g).members) {
    if (block.size() == 1) continue;
    const auto s = static_cast<Eigen::Index>(block.size());
    const Matrix jb = Matrix::Constant(s, s, 1.0 / static_cast<double>(s));
    const Matrix inv = (gather(l, block) + jb).partialPivLu().solve(Matrix::Identity(s, s));
    scatter(out, block, detail::symmetric_part(inv - jb));
  }
  return out;
}

/// L+ from forest weights: for j in the component of i,
/// (w(F^{ij}_{n-v-1}) - w(F_{n-v-1}) / |V_i|) / w(F_{n-v}), else 0.
/// Works on anything exposing `totals` and `matrices` indexed by edge count.
template <typename ForestCoefficients>
Matrix pinv_topological(const ForestCoefficients& coeffs,
                        const ComponentPartition& parts) {
  const auto n = static_cast<Eigen::Index>(parts.component_of.size());
  Matrix out = Matrix::Zero(n, n);
  const int top = static_cast<int>(coeffs.totals.size()) - 1;
  if (top < 1) return out;
  const double dense = coeffs.totals[top];
  const double near = coeffs.totals[top - 1];
  const Matrix& pairs = coeffs.matrices[top - 1];
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!parts.same(static_cast<int>(i), static_cast<int>(j))) continue;
      const double size = static_cast<double>(parts.size_of(static_cast<int>(i)));
      out(i, j) = (pairs(i, j) - near / size) / dense;
    }
  }
  return out;
}

/// Upper end w(F_{n-v}) / w(F_{n-v-1}) = 1 / tr(L+) of the alpha range in
/// which (L + alpha J)^{-1} is a positive combination of Q_{n-v-1} and
/// Q_{n-v}. Infinite for an edgeless graph.
inline double dense_forest_threshold(const WeightedMultigraph& g) {
  const double trace = laplacian_pinv(g).trace();
  return trace > 0.0 ? 1.0 / trace : std::numeric_limits<double>::infinity();
}

/// Default alpha: half the threshold, or 1 when the threshold is infinite.
inline double default_dense_alpha(const WeightedMultigraph& g) {
  const double threshold = dense_forest_threshold(g);
  return std::isfinite(threshold) ? 0.5 * threshold : 1.0;
}

/// (L + alpha J)^{-1}, per component.
inline ProximityMatrix dense_forest_accessibility(const WeightedMultigraph& g,
                                                  double alpha) {
  detail::require_undirected(g, "dense-forest accessibility");
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw PreconditionError("dense-forest accessibility needs a finite alpha != 0");
  }
  const int n = g.order();
  const Matrix l = laplacian(g);
  ProximityMatrix result;
  result.measure = MeasureKind::dense_forests;
  result.alpha = alpha;
  result.values = Matrix::Zero(n, n);
  for (const auto& block : components(g).members) {
    const auto s = static_cast<Eigen::Index>(block.size());
    const Matrix a =
        gather(l, block) + Matrix::Constant(s, s, alpha / static_cast<double>(s));
    scatter(result.values, block,
            detail::symmetric_part(a.partialPivLu().solve(Matrix::Identity(s, s))));
  }
  result.within_regime = alpha > 0.0 && alpha < dense_forest_threshold(g);
  return result;
}

inline ProximityMatrix dense_forest_accessibility(const WeightedMultigraph& g) {
  return dense_forest_accessibility(g, default_dense_alpha(g));
}

/// Change of L+ and of (L + alpha J)^{-1} between two graphs on the same
/// vertex set. They differ by alpha^{-1} times the change of J whenever the
/// component structure changes.
struct DenseForestIncrement {
  Matrix pinv;
  Matrix full;
};

inline DenseForestIncrement dense_forest_increment(const WeightedMultigraph& before,
                                                   const WeightedMultigraph& after,
                                                   double alpha) {
  return {laplacian_pinv(after) - laplacian_pinv(before),
          dense_forest_accessibility(after, alpha).values -
              dense_forest_accessibility(before, alpha).values};
}

/// tau (Q(tau) - J), evaluated as (I/tau + L + J)^{-1} (I - J) so that the
/// cancellation in Q(tau) - J never happens for large tau.
inline Matrix scaled_forest_deviation(const WeightedMultigraph& g, double tau) {
  detail::require_undirected(g, "forest accessibility");
  if (!(tau > 0.0)) throw PreconditionError("tau must be positive");
  const int n = g.order();
  const Matrix l = laplacian(g);
  Matrix out = Matrix::Zero(n, n);
  for (const auto& block : components(g).members) {
    if (block.size() == 1) continue;
    const auto s = static_cast<Eigen::Index>(block.size());
    const Matrix jb = Matrix::Constant(s, s, 1.0 / static_cast<double>(s));
    const Matrix a = Matrix::Identity(s, s) / tau + gather(l, block) + jb;
    scatter(out, block, a.partialPivLu().solve(Matrix::Identity(s, s) - jb));
  }
  return out;
}

}  // namespace proxgraph
