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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "proxgraph/linalg.hpp"

namespace proxgraph {

enum class MeasureKind {
  paths,
  reliability,
  routes,
  forests,
  dense_forests,
  laplacian_pinv,
};

inline constexpr std::array<MeasureKind, 6> kAllMeasureKinds = {
    MeasureKind::paths,   MeasureKind::reliability,   MeasureKind::routes,
    MeasureKind::forests, MeasureKind::dense_forests, MeasureKind::laplacian_pinv,
};

inline std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::paths: return "paths";
    case MeasureKind::reliability: return "reliability";
    case MeasureKind::routes: return "routes";
    case MeasureKind::forests: return "forests";
    case MeasureKind::dense_forests: return "dense-forests";
    case MeasureKind::laplacian_pinv: return "laplacian-pinv";
  }
  return "?";
}

inline std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  for (MeasureKind kind : kAllMeasureKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

/// n x n proximity values plus the parameters that produced them.
struct ProximityMatrix {
  Matrix values;
  MeasureKind measure = MeasureKind::forests;
  std::optional<double> tau;
  std::optional<double> alpha;
  std::optional<double> epsilon0;
  // False when the inputs fall outside the measure's admissible weight
  // regime (e.g. a path weight >= epsilon0). The values are still exact.
  bool within_regime = true;

  int order() const { return static_cast<int>(values.rows()); }
  double operator()(int i, int j) const { return values(i, j); }
};

}  // namespace proxgraph
