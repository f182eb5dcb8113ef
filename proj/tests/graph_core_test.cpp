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

#include <gtest/gtest.h>

#include "proxgraph/graph.hpp"

namespace proxgraph {
namespace {

TEST(GraphCore, RejectsBadEdges) {
  EXPECT_THROW(WeightedMultigraph::undirected(0), InvalidGraph);
  EXPECT_THROW(WeightedMultigraph::undirected(2, {{0, 2, 1.0}}), InvalidGraph);
  EXPECT_THROW(WeightedMultigraph::undirected(2, {{0, 1, 0.0}}), InvalidGraph);
  EXPECT_THROW(WeightedMultigraph::undirected(2, {{0, 1, -1.0}}), InvalidGraph);
}

TEST(GraphCore, ParallelEdgesAddInWeightMatrix) {
  const auto g = WeightedMultigraph::undirected(2, {{0, 1, 0.2}, {1, 0, 0.3}});
  const Matrix e = weight_matrix(g);
  EXPECT_DOUBLE_EQ(e(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(e(1, 0), 0.5);
  EXPECT_EQ(g.max_multiplicity(), 2);
  EXPECT_EQ(g.multiplicity(1, 0), 2);
}

TEST(GraphCore, DirectedWeightMatrixIsOriented) {
  const auto g = WeightedMultigraph::directed(2, {{0, 1, 0.4}});
  const Matrix e = weight_matrix(g);
  EXPECT_DOUBLE_EQ(e(0, 1), 0.4);
  EXPECT_DOUBLE_EQ(e(1, 0), 0.0);
  EXPECT_EQ(g.reversed().edges().front().tail, 1);
}

TEST(GraphCore, LaplacianOfPath) {
  // Path 2-1-3 in 1-based ids.
  const auto g = WeightedMultigraph::undirected(3, {{1, 0, 1.0}, {0, 2, 1.0}});
  Matrix expected(3, 3);
  expected << 2, -1, -1, -1, 1, 0, -1, 0, 1;
  EXPECT_EQ(laplacian(g), expected);
  EXPECT_NEAR(laplacian(g).rowwise().sum().cwiseAbs().maxCoeff(), 0.0, 0.0);
}

TEST(GraphCore, LoopsDoNotEnterLaplacian) {
  const auto g = WeightedMultigraph::undirected(2, {{0, 0, 3.0}, {0, 1, 1.0}});
  EXPECT_DOUBLE_EQ(laplacian(g)(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(weight_matrix(g)(0, 0), 3.0);
}

TEST(GraphCore, LaplacianNeedsUndirectedGraph) {
  EXPECT_THROW(laplacian(WeightedMultigraph::directed(2, {{0, 1, 1.0}})), PreconditionError);
}

TEST(GraphCore, ComponentsAndAveragingMatrix) {
  const auto g = WeightedMultigraph::undirected(3, {{0, 1, 1.0}});
  const auto parts = components(g);
  EXPECT_EQ(parts.count(), 2);
  EXPECT_TRUE(parts.same(0, 1));
  EXPECT_FALSE(parts.same(0, 2));
  EXPECT_EQ(parts.size_of(1), 2U);
  Matrix expected(3, 3);
  expected << 0.5, 0.5, 0, 0.5, 0.5, 0, 0, 0, 1;
  EXPECT_EQ(averaging_matrix(g), expected);
}

TEST(GraphCore, ComponentsOfDigraphIgnoreOrientation) {
  const auto g = WeightedMultigraph::directed(3, {{0, 1, 1.0}, {2, 1, 1.0}});
  EXPECT_EQ(components(g).count(), 1);
}

TEST(GraphCore, ScaleWeights) {
  const auto g = WeightedMultigraph::undirected(2, {{0, 1, 0.5}});
  EXPECT_DOUBLE_EQ(scale_weights(g, 4.0).edges().front().weight, 2.0);
  EXPECT_THROW(scale_weights(g, 0.0), InvalidGraph);
}

TEST(GraphCore, SymmetrizeDigraphWithSymmetricWeights) {
  const auto d = WeightedMultigraph::directed(2, {{0, 1, 0.3}, {1, 0, 0.1}, {1, 0, 0.2}});
  ASSERT_TRUE(has_symmetric_weights(d));
  const auto u = symmetrize(d);
  EXPECT_FALSE(u.is_directed());
  EXPECT_NEAR(weight_matrix(u)(0, 1), 0.3, 1e-15);
}

TEST(GraphCore, ReachabilityAvoidingAVertex) {
  // 0 -> 1 -> 2 and 0 -> 2 directly missing: 2 is reachable only through 1.
  const auto g = WeightedMultigraph::directed(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto all = reachability(g);
  EXPECT_TRUE(all[0][2]);
  EXPECT_FALSE(all[2][0]);
  const auto avoid = reachability(g, 1);
  EXPECT_FALSE(avoid[0][2]);
  EXPECT_TRUE(avoid[0][0]);
}

TEST(GraphCore, ModificationsReturnNewGraphs) {
  const auto g = WeightedMultigraph::undirected(3, {{0, 1, 1.0}});
  const auto h = g.with_edge({1, 2, 0.5}).with_weight_increase(0, 0.25);
  EXPECT_EQ(g.size(), 1U);
  EXPECT_EQ(h.size(), 2U);
  EXPECT_DOUBLE_EQ(h.edges()[0].weight, 1.25);
  EXPECT_DOUBLE_EQ(h.max_weight(), 1.25);
}

}  // namespace
}  // namespace proxgraph
