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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "proxgraph/proxgraph.hpp"

namespace {

using namespace proxgraph;

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double rel_error(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Largest absolute row sum.
double inf_norm(const Matrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

Outcome merge_values() {
  Outcome o;
  for (const auto& c : examples::merge_counterexample_checks()) {
    o.passed = o.passed && c.passed();
    o.notes.push_back(c.describe());
  }
  o.detail = "4 entries of the L+ increment at abs tol 1e-12";
  return o;
}

Outcome route_values() {
  Outcome o;
  int checks = 0;
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& c : examples::route_worked_checks(n)) {
      ++checks;
      worst = std::max(worst, std::abs(c.expected - c.observed));
      if (!c.passed()) {
        o.passed = false;
        o.notes.push_back(c.describe());
      }
    }
  }
  o.detail = std::to_string(checks) + " entries for n=3..6, max abs error " + fmt("%.3g", worst);
  return o;
}

Outcome matrix_forest() {
  Outcome o;
  double worst_q = 0.0;
  double worst_det = 0.0;
  const auto corpus = make_corpus(Regime::forests, 1);
  for (const auto& cg : corpus) {
    const auto census = oracle::enum_rooted_forests(cg.graph);
    const int n = cg.graph.order();
    for (double tau : {0.5, 1.0, 2.0}) {
      double power = 1.0;
      double total = 0.0;
      Matrix pairs = Matrix::Zero(n, n);
      for (std::size_t k = 0; k < census.totals.size(); ++k) {
        total += power * census.totals[k];
        pairs += power * census.matrices[k];
        power *= tau;
      }
      const Matrix q = forest_accessibility(cg.graph, tau).values;
      worst_q = std::max(worst_q, max_rel_diff(q, pairs / total));
      const Matrix a = Matrix::Identity(n, n) + tau * laplacian(cg.graph);
      worst_det = std::max(worst_det, rel_error(a.determinant(), total));
    }
  }
  o.passed = worst_q <= 1e-9 && worst_det <= 1e-10;
  o.detail = std::to_string(corpus.size()) + " graphs x tau in {0.5,1,2}: max rel error Q " +
             fmt("%.3g", worst_q) + ", det " + fmt("%.3g", worst_det);
  return o;
}

Outcome forest_row_sums() {
  Outcome o;
  int exact_failures = 0;
  for (const auto& cg : make_corpus(Regime::forests_integer, 1)) {
    const auto census = oracle::enum_rooted_forests(cg.graph);
    const auto stack = qk_decomposition(cg.graph);
    for (std::size_t k = 0; k < census.totals.size(); ++k) {
      for (Vertex i = 0; i < cg.graph.order(); ++i) {
        if (census.matrices[k].row(i).sum() != census.totals[k]) ++exact_failures;
        if (stack.matrices[k].row(i).sum() != stack.totals[k]) ++exact_failures;
      }
    }
  }
  double worst = 0.0;
  for (const auto& cg : make_corpus(Regime::forests, 1)) {
    const auto census = oracle::enum_rooted_forests(cg.graph);
    for (std::size_t k = 0; k < census.totals.size(); ++k) {
      for (Vertex i = 0; i < cg.graph.order(); ++i) {
        worst = std::max(worst, rel_error(census.matrices[k].row(i).sum(), census.totals[k]));
      }
    }
  }
  o.passed = exact_failures == 0 && worst <= 1e-10;
  o.detail = "integer corpus: " + std::to_string(exact_failures) +
             " inexact row sums; real corpus: max rel error " + fmt("%.3g", worst);
  return o;
}

WeightedMultigraph random_multigraph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = 0.1 + 0.6 * unit(rng);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (int p = 0; p < 2; ++p) {
        if (unit(rng) < density) edges.push_back({a, b, 0.1 + 2.9 * unit(rng)});
      }
    }
  }
  return WeightedMultigraph::undirected(n, edges);
}

Outcome penrose() {
  Outcome o;
  std::mt19937_64 rng(20);
  double worst = 0.0;
  int graphs = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int trial = 0; trial < 5; ++trial, ++graphs) {
      const auto g = random_multigraph(rng, n);
      const Matrix l = laplacian(g);
      const Matrix p = laplacian_pinv(g);
      const Matrix lp = l * p;
      const Matrix pl = p * l;
      for (double r : {max_abs(lp * l - l), max_abs(pl * p - p), max_abs(lp - lp.transpose()),
                       max_abs(pl - pl.transpose()),
                       max_abs(lp - (Matrix::Identity(n, n) - averaging_matrix(g)))}) {
        worst = std::max(worst, r);
      }
    }
  }
  o.passed = worst <= 1e-9;
  o.detail = std::to_string(graphs) + " random multigraphs with n=1..20: max residual " +
             fmt("%.3g", worst);
  return o;
}

Outcome forest_limit() {
  Outcome o;
  const double tau = 1e6;
  double worst = 0.0;
  double worst_direct = 0.0;
  int used = 0;
  for (const auto& cg : make_corpus(Regime::forests, 1)) {
    const Matrix l = laplacian(cg.graph);
    if (inf_norm(l) > 10.0) continue;
    ++used;
    const Matrix p = laplacian_pinv(cg.graph);
    worst = std::max(worst, inf_norm(scaled_forest_deviation(cg.graph, tau) - p));
    const Matrix direct =
        tau * (forest_accessibility(cg.graph, tau).values - averaging_matrix(cg.graph));
    worst_direct = std::max(worst_direct, inf_norm(direct - p));
  }
  o.passed = used > 0 && worst <= 1e-4;
  o.detail = std::to_string(used) + " corpus graphs with ||L||inf <= 10 at tau=1e6: max " +
             fmt("%.3g", worst) + " (direct subtraction of J: " + fmt("%.3g", worst_direct) +
             ")";
  return o;
}

Outcome reliability_oracle() {
  Outcome o;
  double worst = 0.0;
  int graphs = 0;
  for (const auto& cg : make_corpus(Regime::reliability, 1)) {
    if (cg.graph.size() > 12) continue;
    ++graphs;
    const Matrix p = connection_reliability(cg.graph, MeasureConfig{}.reliability).values;
    for (Vertex i = 0; i < cg.graph.order(); ++i) {
      for (Vertex j = 0; j < cg.graph.order(); ++j) {
        worst = std::max(worst, std::abs(p(i, j) - oracle::reliability_by_states(cg.graph, i, j)));
      }
    }
  }
  o.passed = worst <= 1e-12;
  o.detail = std::to_string(graphs) + " graphs with |E| <= 12: max abs error " + fmt("%.3g", worst);
  return o;
}

Outcome rank_one() {
  Outcome o;
  const auto corpus = make_corpus(Regime::routes, 1);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick_graph(0, corpus.size() - 1);
  double worst = 0.0;
  int done = 0;
  int directed = 0;
  while (done < 100) {
    const auto& cg = corpus[pick_graph(rng)];
    const auto candidates = candidate_perturbations(cg.graph, cg.weight_cap, cg.multiplicity);
    if (candidates.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto& pert = candidates[pick(rng)];
    const auto after = pert.apply(cg.graph);
    if (!check_admissibility(after).weight_constraint_satisfied) continue;
    const Matrix before = route_accessibility(cg.graph).values;
    const Matrix fresh = route_accessibility(after).values;
    const Matrix updated =
        edge_update(before, cg.graph.is_directed(), pert.k, pert.t, pert.delta);
    worst = std::max(worst, max_abs_diff(updated, fresh) / max_abs(fresh));
    directed += cg.graph.is_directed() ? 1 : 0;
    ++done;
  }
  o.passed = worst <= 1e-10;
  o.detail = "100 perturbations (" + std::to_string(directed) +
             " on digraphs): max rel error " + fmt("%.3g", worst);
  return o;
}

Outcome table1() {
  Outcome o;
  const Table1Options options;
  const auto result = reproduce_table1(options);
  int falsified = 0;
  int missing = 0;
  int replay_failures = 0;
  int witnesses = 0;
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
      const auto& cell = result.cells[r][c];
      const std::string expected = published_table()[r][c];
      const auto cmp = compare_cell(expected, cell);
      const std::string where = std::string(to_string(kTableColumns[c])) + " x " +
                                std::string(to_string(kTableRows[r]));
      if (cell.witness) {
        ++witnesses;
        const Measure m = make_measure(kTableColumns[c], options.measures);
        const double replay = replay_margin(m, cell.witness->graph, cell.witness->report);
        const double recorded = cell.witness->report.margin;
        if (!(replay < 0.0) || std::abs(replay - recorded) > 1e-12 * std::max(1.0, std::abs(recorded))) {
          ++replay_failures;
          o.notes.push_back("witness does not replay: " + where);
        }
      }
      if (cmp.falsified) {
        ++falsified;
        o.notes.push_back("published " + expected + " falsified: " + where + ", " +
                          std::to_string(cell.violated) + " violations, e.g. " +
                          cell.witness->report.serialize() + " on " +
                          cli::detail::describe_graph(cell.witness->graph));
      }
      if (cmp.missing_witness) {
        ++missing;
        o.notes.push_back("published - without witness: " + where);
      }
    }
  }
  o.passed = falsified == 0 && missing == 0 && replay_failures == 0;
  o.detail = std::to_string(falsified) + " positive cells falsified, " +
             std::to_string(missing) + " negative cells without witness, " +
             std::to_string(witnesses) + " witnesses replayed (" +
             std::to_string(replay_failures) + " mismatches)";
  return o;
}

Outcome figures() {
  Outcome o;
  int failed = 0;
  const auto checks = examples::run_figure_examples();
  for (const auto& c : checks) {
    if (!c.passed()) {
      ++failed;
      o.notes.push_back(c.describe());
    }
  }
  o.passed = failed == 0;
  o.detail = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
             " stated orderings reproduced";
  return o;
}

Outcome metric() {
  Outcome o;
  int checked = 0;
  for (MeasureKind kind : {MeasureKind::forests, MeasureKind::dense_forests}) {
    const Measure m = make_measure(kind);
    for (const auto& cg : make_corpus(Regime::forests, 1)) {
      const auto r = check_metric(m, cg.graph);
      ++checked;
      if (r.verdict != Verdict::holds) {
        o.passed = false;
        o.notes.push_back(r.serialize() + " on " + cli::detail::describe_graph(cg.graph));
      }
    }
  }
  o.detail = std::to_string(checked) + " (measure, graph) pairs, all triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"L+ merge increment values", merge_values},
      {"route values on the complete digraph without in-arcs", route_values},
      {"matrix-forest equivalence against the forest census", matrix_forest},
      {"forest row sums", forest_row_sums},
      {"Penrose conditions for L+", penrose},
      {"large-tau limit of tau(Q - J)", forest_limit},
      {"reliability against state enumeration", reliability_oracle},
      {"rank-one route update against recomputation", rank_one},
      {"property grid regeneration", table1},
      {"figure orderings", figures},
      {"metric representability of forest measures", metric},
  };
  int failed = 0;
  for (std::size_t a = 0; a < criteria.size(); ++a) {
    const Outcome o = criteria[a].second();
    std::printf("criterion %zu %s: %s: %s\n", a + 1, o.passed ? "PASS" : "FAIL",
                criteria[a].first, o.detail.c_str());
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
