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

// Empirical property grid of the five measures over seeded corpora,
// compared against the published grid.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "proxgraph/axioms.hpp"
#include "proxgraph/corpus.hpp"

namespace proxgraph {

inline constexpr std::array<Property, 10> kTableRows = {
    Property::symmetry,       Property::nonnegativity,       Property::reversal,
    Property::diagonal_maximality, Property::triangle,       Property::disconnection,
    Property::transit,        Property::monotonicity_1,      Property::monotonicity_2,
    Property::monotonicity_3,
};

inline constexpr std::array<MeasureKind, 5> kTableColumns = {
    MeasureKind::paths, MeasureKind::reliability, MeasureKind::routes,
    MeasureKind::forests, MeasureKind::dense_forests,
};

/// Published grid, rows as kTableRows, columns as kTableColumns.
inline const std::array<std::array<const char*, 5>, 10>& published_table() {
  static const std::array<std::array<const char*, 5>, 10> grid = {{
      {"+", "+", "+", "+", "+"},
      {"+", "+", "+", "+", "+"},
      {"+", "+", "+", "x", "x"},
      {"+*", "+*", "+", "+", "+"},
      {"+*", "+*", "+**", "+", "+"},
      {"+", "+", "+", "+", "+"},
      {"+*", "+*", "+", "+", "+"},
      {"+*", "+*", "+", "+", "-"},
      {"+", "+*", "+", "+", "-"},
      {"+", "+", "-", "+", "-"},
  }};
  return grid;
}

struct TableWitness {
  WeightedMultigraph graph;
  PropertyReport report;
};

struct TableCell {
  Property property = Property::symmetry;
  MeasureKind measure = MeasureKind::paths;
  int holds = 0;
  int nonstrict = 0;
  int violated = 0;
  int not_applicable = 0;
  std::optional<TableWitness> witness;  // first violation found

  std::string symbol() const {
    if (violated > 0) return "-";
    if (nonstrict > 0) return "+*";
    if (holds == 0) return "x";
    return "+";
  }

  void record(const WeightedMultigraph& g, const PropertyReport& r) {
    switch (r.verdict) {
      case Verdict::holds: ++holds; break;
      case Verdict::holds_nonstrict: ++nonstrict; break;
      case Verdict::not_applicable: ++not_applicable; break;
      case Verdict::violated:
        ++violated;
        if (!witness) witness = TableWitness{g, r};
        break;
    }
  }
};

struct TableComparison {
  std::string expected;
  std::string observed;
  // A positive published cell came out violated.
  bool falsified = false;
  // A negative published cell has no witness.
  bool missing_witness = false;
  bool ok() const { return !falsified && !missing_witness; }
};

inline TableComparison compare_cell(const std::string& expected, const TableCell& cell) {
  TableComparison c{expected, cell.symbol()};
  if (expected.front() == '+') c.falsified = cell.violated > 0;
  if (expected == "-") c.missing_witness = !cell.witness;
  return c;
}

struct Table1Options {
  std::uint64_t seed = 1;
  CorpusOptions corpus;
  MeasureConfig measures;
  // Perturbations tried per graph; 0 means every candidate.
  std::size_t perturbations_per_graph = 0;
};

struct Table1Result {
  std::array<std::array<TableCell, 5>, 10> cells;
  std::array<std::size_t, 5> graphs_checked{};

  const TableCell& cell(Property p, MeasureKind m) const {
    for (std::size_t r = 0; r < kTableRows.size(); ++r) {
      for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
        if (kTableRows[r] == p && kTableColumns[c] == m) return cells[r][c];
      }
    }
    throw PreconditionError("no such table cell");
  }

  bool matches_published() const {
    for (std::size_t r = 0; r < kTableRows.size(); ++r) {
      for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
        if (!compare_cell(published_table()[r][c], cells[r][c]).ok()) return false;
      }
    }
    return true;
  }
};

inline Regime table_regime(MeasureKind m) {
  switch (m) {
    case MeasureKind::paths: return Regime::paths;
    case MeasureKind::reliability: return Regime::reliability;
    case MeasureKind::routes: return Regime::routes;
    default: return Regime::forests;
  }
}

namespace detail {

inline void sweep_graph(const Measure& measure, const CorpusGraph& cg,
                        std::size_t column, const Table1Options& options,
                        std::mt19937_64& rng, Table1Result& out, bool skip_triangle) {
  const auto& g = cg.graph;
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    const Property p = kTableRows[r];
    if (is_monotonicity(p) || (skip_triangle && p == Property::triangle)) continue;
    out.cells[r][column].record(g, check_property(measure, g, p));
  }
  auto candidates = candidate_perturbations(g, cg.weight_cap, cg.multiplicity);
  if (options.perturbations_per_graph > 0 &&
      candidates.size() > options.perturbations_per_graph) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(options.perturbations_per_graph);
  }
  for (const auto& pert : candidates) {
    const auto reports = check_monotonicity(measure, g, pert);
    for (std::size_t item = 0; item < 3; ++item) {
      out.cells[7 + item][column].record(g, reports[item]);
    }
  }
}

}  // namespace detail

/// Runs every table row for every column over its regime's corpus. The
/// route triangle row uses its own, tighter corpus.
inline Table1Result reproduce_table1(const Table1Options& options = {}) {
  Table1Result out;
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
      out.cells[r][c].property = kTableRows[r];
      out.cells[r][c].measure = kTableColumns[c];
    }
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
    const MeasureKind kind = kTableColumns[c];
    const Measure measure = make_measure(kind, options.measures);
    const bool routes = kind == MeasureKind::routes;
    for (const auto& cg : make_corpus(table_regime(kind), options.seed, options.corpus)) {
      detail::sweep_graph(measure, cg, c, options, rng, out, routes);
      ++out.graphs_checked[c];
    }
    if (routes) {
      for (const auto& cg :
           make_corpus(Regime::route_triangle, options.seed, options.corpus)) {
        out.cells[4][c].record(cg.graph, check_triangle(measure, cg.graph));
      }
    }
  }
  return out;
}

}  // namespace proxgraph
