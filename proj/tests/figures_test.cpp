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

#include "proxgraph/figures.hpp"

namespace proxgraph {
namespace {

TEST(Figures, AllStatedOrderingsHold) {
  const auto checks = examples::run_figure_examples();
  EXPECT_EQ(checks.size(), 17U);
  for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.describe();
}

TEST(Figures, StarWithChordForestTies) {
  // k is a leaf at i; t and u form a triangle with i. Forest accessibility
  // still ties i-k, i-t and i-u.
  const Matrix q = forest_accessibility(examples::star_with_chord()).values;
  EXPECT_NEAR(q(examples::kI, examples::kK), q(examples::kI, examples::kT), 1e-15);
  EXPECT_NEAR(q(examples::kI, examples::kK), q(examples::kI, examples::kU), 1e-15);
}

TEST(Figures, ExampleGraphsHaveExpectedShape) {
  EXPECT_EQ(examples::star_with_chord().size(), 4U);
  EXPECT_EQ(examples::shared_first_edge().order(), 10);
  EXPECT_EQ(examples::shared_first_edge().size(), 11U);
  EXPECT_EQ(examples::pendant_triangle().size(), 5U);
}

TEST(Figures, OrderingCheckTolerance) {
  examples::OrderingCheck c;
  c.lhs_value = 1.0;
  c.rhs_value = 1.0 + 1e-14;
  EXPECT_EQ(c.observed(), examples::Order::equal);
  c.rhs_value = 1.1;
  EXPECT_EQ(c.observed(), examples::Order::less);
}

TEST(Figures, AppendixValues) {
  for (const auto& c : examples::merge_counterexample_checks()) {
    EXPECT_TRUE(c.passed()) << c.describe();
  }
  for (int n = 3; n <= 6; ++n) {
    for (const auto& c : examples::route_worked_checks(n)) {
      EXPECT_TRUE(c.passed()) << c.describe();
    }
  }
}

}  // namespace
}  // namespace proxgraph
