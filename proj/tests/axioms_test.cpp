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

#include <string>

#include "proxgraph/axioms.hpp"
#include "proxgraph/corpus.hpp"
#include "proxgraph/figures.hpp"

namespace proxgraph {
namespace {

const Measure kForests = make_measure(MeasureKind::forests);
const Measure kDense = make_measure(MeasureKind::dense_forests);
const Measure kRoutes = make_measure(MeasureKind::routes);
const Measure kPaths = make_measure(MeasureKind::paths);
const Measure kReliability = make_measure(MeasureKind::reliability);

WeightedMultigraph small_digraph() {
  return WeightedMultigraph::directed(3, {{0, 1, 0.2}, {1, 2, 0.3}, {2, 0, 0.25}});
}

TEST(Properties, NamesRoundTrip) {
  for (Property p : kAllProperties) {
    ASSERT_TRUE(parse_property(to_string(p)).has_value());
    EXPECT_EQ(*parse_property(to_string(p)), p);
  }
  EXPECT_FALSE(parse_property("sparkle").has_value());
  EXPECT_TRUE(is_monotonicity(Property::monotonicity_2));
  EXPECT_FALSE(is_monotonicity(Property::transit));
}

TEST(Properties, SymmetryAndNonnegativity) {
  const auto g = examples::star_with_chord();
  for (const Measure* m : {&kForests, &kDense, &kRoutes}) {
    const auto g2 = m == &kRoutes ? scale_weights(g, 0.2) : g;
    EXPECT_EQ(check_symmetry(*m, g2).verdict, Verdict::holds) << m->name;
  }
  EXPECT_EQ(check_nonnegativity(kForests, g).verdict, Verdict::holds);
  // L+ has negative entries.
  EXPECT_EQ(check_nonnegativity(make_measure(MeasureKind::laplacian_pinv), g).verdict,
            Verdict::violated);
}

TEST(Properties, ReversalOnlyForDigraphs) {
  EXPECT_EQ(check_reversal(kRoutes, scale_weights(examples::star_with_chord(), 0.2)).verdict,
            Verdict::not_applicable);
  EXPECT_EQ(check_reversal(kRoutes, small_digraph()).verdict, Verdict::holds);
  EXPECT_EQ(check_reversal(kPaths, small_digraph()).verdict, Verdict::holds);
  EXPECT_EQ(check_reversal(kForests, small_digraph()).verdict, Verdict::not_applicable);
}

TEST(Properties, DiagonalMaximality) {
  EXPECT_EQ(check_diagonal_maximality(kForests, examples::pendant_triangle()).verdict,
            Verdict::holds);
  EXPECT_EQ(check_diagonal_maximality(kRoutes, small_digraph()).verdict, Verdict::holds);
  // A weight past the regime lets a neighbour outrank the vertex itself.
  const auto heavy = WeightedMultigraph::undirected(3, {{0, 1, 1.5}, {1, 2, 1.5}});
  EXPECT_EQ(check_diagonal_maximality(kPaths, heavy).verdict, Verdict::violated);
}

TEST(Properties, TriangleInequality) {
  EXPECT_EQ(check_triangle(kForests, examples::shared_first_edge()).verdict, Verdict::holds);
  EXPECT_EQ(check_triangle(kDense, examples::shared_first_edge()).verdict, Verdict::holds);
  EXPECT_EQ(check_triangle(kRoutes, small_digraph()).verdict, Verdict::not_applicable);
}

TEST(Properties, MetricTransform) {
  const Matrix p = forest_accessibility(examples::star_with_chord()).values;
  const Matrix d = metric_transform(p);
  EXPECT_NEAR(d(0, 1), p(0, 0) + p(1, 1) - 2 * p(0, 1), 1e-15);
  EXPECT_EQ(check_metric(kForests, examples::star_with_chord()).verdict, Verdict::holds);
  const auto split = WeightedMultigraph::undirected(4, {{0, 1, 1.0}, {2, 3, 2.0}});
  EXPECT_EQ(check_metric(kForests, split).verdict, Verdict::holds);
  EXPECT_EQ(check_metric(kDense, split).verdict, Verdict::holds);
}

TEST(Properties, MetricAxiomsCatchBadMatrices) {
  Matrix d(3, 3);
  d << 0, 1, 5, 1, 0, 1, 5, 1, 0;  // 5 > 1 + 1
  const auto parts = components(WeightedMultigraph::undirected(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
  const auto r = check_metric_axioms(d, parts);
  EXPECT_EQ(r.verdict, Verdict::violated);
  EXPECT_NEAR(r.margin, -3.0, 1e-15);
}

TEST(Properties, DisconnectionAndConnectivity) {
  const auto split = WeightedMultigraph::undirected(4, {{0, 1, 0.3}, {2, 3, 0.2}});
  for (const Measure* m : {&kForests, &kDense, &kRoutes, &kPaths, &kReliability}) {
    EXPECT_EQ(check_disconnection(*m, split).verdict, Verdict::holds) << m->name;
    EXPECT_EQ(check_connectivity(*m, split).verdict, Verdict::holds) << m->name;
  }
  EXPECT_EQ(check_disconnection(kRoutes, small_digraph()).verdict, Verdict::holds);
  const auto chain = WeightedMultigraph::directed(3, {{0, 1, 0.3}, {1, 2, 0.3}});
  EXPECT_EQ(check_disconnection(kRoutes, chain).verdict, Verdict::holds);
  EXPECT_EQ(check_connectivity(kRoutes, chain).verdict, Verdict::holds);
}

TEST(Properties, TransitTriples) {
  // Path 0-1-2: every path from 0 to 2 passes through 1.
  const auto g = WeightedMultigraph::undirected(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto triples = transit_triples(g);
  EXPECT_NE(std::find(triples.begin(), triples.end(), std::array<Vertex, 3>{0, 1, 2}),
            triples.end());
  EXPECT_EQ(std::find(triples.begin(), triples.end(), std::array<Vertex, 3>{1, 0, 2}),
            triples.end());
  EXPECT_EQ(check_transit(kForests, g).verdict, Verdict::holds);
  EXPECT_EQ(check_transit(kForests, examples::pendant_triangle()).verdict, Verdict::holds);
}

TEST(Properties, DoublyStochastic) {
  EXPECT_EQ(check_doubly_stochastic(kForests, examples::star_with_chord()).verdict,
            Verdict::holds);
  EXPECT_EQ(check_doubly_stochastic(kDense, examples::star_with_chord()).verdict,
            Verdict::violated);
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  EXPECT_EQ(check_doubly_stochastic(m).verdict, Verdict::holds);
}

TEST(Properties, Macrovertex) {
  const auto g = examples::star_with_chord();
  const std::vector<Vertex> d{examples::kT, examples::kU};
  EXPECT_TRUE(is_macrovertex(g, d));
  EXPECT_FALSE(is_macrovertex(g, {examples::kK, examples::kT}));
  EXPECT_EQ(check_macrovertex(kForests, g, d).verdict, Verdict::holds);
  MeasureConfig fixed;
  fixed.alpha = default_dense_alpha(g);
  EXPECT_EQ(check_macrovertex(make_measure(MeasureKind::dense_forests, fixed), g, d).verdict,
            Verdict::holds);
  EXPECT_THROW(check_macrovertex(kForests, g, {examples::kK, examples::kT}), InvalidGraph);
}

TEST(Properties, CheckPropertyNeedsExtraInputForSomeProperties) {
  const auto g = examples::star_with_chord();
  EXPECT_THROW(check_property(kForests, g, Property::monotonicity_1), PreconditionError);
  EXPECT_THROW(check_property(kForests, g, Property::macrovertex), PreconditionError);
}

TEST(Monotonicity, HypothesisSet) {
  // 0 - 1 - 2 with a pendant 3 on 0: both 0 and 3 reach 2 only through 1.
  const auto g = WeightedMultigraph::undirected(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 3, 1.0}});
  EXPECT_EQ(monotonicity_hypothesis(g, 1, 2), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(monotonicity_hypothesis(g, 1, 1).empty());
}

TEST(Monotonicity, ForestsOnPendantTriangle) {
  const auto g = examples::pendant_triangle();
  for (const auto& pert : candidate_perturbations(g, std::numeric_limits<double>::infinity(), 2)) {
    for (const auto& r : check_monotonicity(kForests, g, pert)) {
      EXPECT_NE(r.verdict, Verdict::violated) << r.serialize();
    }
  }
}

TEST(Monotonicity, CandidatePerturbationsRespectCaps) {
  const auto g = WeightedMultigraph::undirected(3, {{0, 1, 0.2}});
  const auto candidates = candidate_perturbations(g, 0.5, 1);
  ASSERT_EQ(candidates.size(), 3U);  // raise 0-1, add 0-2 and 1-2
  EXPECT_EQ(candidates[0].kind, Perturbation::Kind::increase_weight);
  EXPECT_NEAR(candidates[0].delta, 0.15, 1e-15);
  EXPECT_EQ(candidates[1].kind, Perturbation::Kind::add_edge);
  EXPECT_NEAR(candidates[1].delta, 0.25, 1e-15);
  EXPECT_EQ(candidates[1].describe(), "add-edge:1:3:0.25");
}

// Item 1 for dense forests, read on L+: attaching an isolated vertex
// raises the old edge's entry more than the new one's.
TEST(Monotonicity, DenseForestMergeWitness) {
  const auto [before, after] = examples::merge_counterexample();
  const auto pert = Perturbation::add(0, 2, 1.0);
  const auto reports = check_monotonicity(kDense, before, pert);
  EXPECT_EQ(reports[0].verdict, Verdict::violated);
  EXPECT_NEAR(replay_margin(kDense, before, reports[0]), reports[0].margin, 1e-15);
}

// Adding k -> t closes the cycle i -> k -> t -> i, so p_ii grows although
// every path from i to t runs through k.
TEST(Counterexample, DirectedPathsItem3) {
  const auto g = WeightedMultigraph::directed(3, {{1, 2, 0.5}, {2, 0, 0.45}});
  const auto pert = Perturbation::add(0, 1, 0.3);
  EXPECT_EQ(monotonicity_hypothesis(g, 0, 1), (std::vector<Vertex>{2}));
  const auto reports = check_monotonicity(kPaths, g, pert);
  EXPECT_EQ(reports[2].verdict, Verdict::violated);
  EXPECT_NEAR(reports[2].margin, -0.3 * 0.5 * 0.45, 1e-15);
  EXPECT_EQ(reports[2].witness->vertices, (std::vector<Vertex>{2, 2}));
}

// For reliability the new arc 4 -> 2 opens the route 1 -> 4 -> 2 -> 3
// from 1 to 3, both of which reach 2 only through 4.
TEST(Counterexample, DirectedReliabilityItem3) {
  const auto g = WeightedMultigraph::directed(
      4, {{2, 0, 0.40759540534858013}, {1, 2, 0.3565675480705256},
          {0, 3, 0.2504701301819654}, {1, 0, 0.31031610552290506}});
  const auto pert = Perturbation::add(3, 1, 0.220309850269);
  const auto reports = check_monotonicity(kReliability, g, pert);
  EXPECT_EQ(reports[2].verdict, Verdict::violated);
  EXPECT_NEAR(reports[2].margin, -0.0196757670193, 1e-12);
  EXPECT_NEAR(replay_margin(kReliability, g, reports[2]), reports[2].margin, 1e-15);
}

// Raising the weight of edge {1,3} increases p_33 by more than p_13.
TEST(Counterexample, UndirectedRoutesItem1) {
  const auto g = WeightedMultigraph::undirected(
      3, {{0, 1, 0.35709314795393116}, {0, 2, 0.46216135898340555},
          {1, 2, 0.45539712449380199}});
  const auto pert = Perturbation::increase(g, 1, 0.0189193205083);
  EXPECT_LT(pert.apply(g).max_weight(), 0.5);
  const auto reports = check_monotonicity(kRoutes, g, pert);
  EXPECT_EQ(reports[0].verdict, Verdict::violated);
  EXPECT_EQ(reports[0].witness->vertices, (std::vector<Vertex>{2, 2}));
  const Matrix dp = route_accessibility(pert.apply(g)).values - route_accessibility(g).values;
  EXPECT_GT(dp(2, 2), dp(0, 2));
  EXPECT_NEAR(reports[0].margin, dp(0, 2) - dp(2, 2), 1e-15);
}

TEST(Witness, SerializationIsOneBased) {
  const auto g = WeightedMultigraph::undirected(3, {{0, 1, 1.5}, {1, 2, 1.5}});
  const auto r = check_diagonal_maximality(kPaths, g);
  const std::string line = r.serialize();
  EXPECT_EQ(line.rfind("paths diagonal-maximality violated ", 0), 0U) << line;
  EXPECT_NE(line.find("vertices="), std::string::npos);
  EXPECT_NEAR(replay_margin(kPaths, g, r), r.margin, 1e-15);
}

}  // namespace
}  // namespace proxgraph
