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

// Command implementations behind the proxgraph tool. Each command writes to
// the given streams and returns the process exit status.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "proxgraph/axioms.hpp"
#include "proxgraph/corpus.hpp"
#include "proxgraph/errors.hpp"
#include "proxgraph/figures.hpp"
#include "proxgraph/forest_measures.hpp"
#include "proxgraph/graph_io.hpp"
#include "proxgraph/path_measures.hpp"
#include "proxgraph/table1.hpp"
#include "proxgraph/walk_measures.hpp"

namespace proxgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;

/// 12 significant digits; negative zero prints as 0.
inline std::string format_value(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_value(m(i, j));
    }
    out << '\n';
  }
}

inline WeightedMultigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

enum class OutputMode { matrix, report };

struct RunConfig {
  std::string measure = "forests";  // a MeasureKind name or "qk"
  double tau = 1.0;
  std::optional<double> alpha;
  double scale = 1.0;
  OutputMode mode = OutputMode::matrix;
  PathOptions paths;
};

inline const char* orientation_name(PathOptions::CycleOrientation o) {
  return o == PathOptions::CycleOrientation::once ? "once" : "both";
}

inline const char* diagonal_name(PathOptions::Diagonal d) {
  return d == PathOptions::Diagonal::trivial_only ? "trivial" : "cycles";
}

namespace detail {

inline std::string header(const RunConfig& config, const WeightedMultigraph& g) {
  return "# measure=" + config.measure + " n=" + std::to_string(g.order()) +
         (g.is_directed() ? " directed" : " undirected") +
         " scale=" + format_value(config.scale);
}

inline void write_row_sums(std::ostream& out, const Matrix& m) {
  out << "row-sums";
  for (Eigen::Index i = 0; i < m.rows(); ++i) out << ' ' << format_value(m.row(i).sum());
  out << '\n';
}

}  // namespace detail

/// Prints one measure matrix (or the Q_k stack) for g.
inline int cmd_compute(const RunConfig& config, WeightedMultigraph g, std::ostream& out,
                       std::ostream& err) {
  if (config.scale != 1.0) g = scale_weights(g, config.scale);
  const bool report = config.mode == OutputMode::report;
  std::string head = detail::header(config, g);

  if (config.measure == "qk") {
    const QkStack stack = qk_decomposition(g);
    out << head << " max_edges=" << stack.max_edges() << '\n';
    for (int k = 0; k <= stack.max_edges(); ++k) {
      out << "# k=" << k << " forests=" << format_value(stack.totals[k]) << '\n';
      write_matrix(out, stack.matrices[k]);
    }
    return kExitOk;
  }

  const auto kind = parse_measure_kind(config.measure);
  if (!kind) throw PreconditionError("unknown measure '" + config.measure + "'");

  std::vector<std::string> notes;
  Matrix values;
  switch (*kind) {
    case MeasureKind::paths: {
      const auto p = path_accessibility(g, config.paths);
      head += std::string(" cycles=") + orientation_name(config.paths.orientation) +
              " diagonal=" + diagonal_name(config.paths.diagonal);
      if (p.epsilon0) notes.push_back("epsilon0 " + format_value(*p.epsilon0));
      notes.push_back(std::string("within-regime ") + (p.within_regime ? "yes" : "no"));
      if (!p.within_regime) {
        err << "warning: some edge weight is at least epsilon0(n, m)\n";
      }
      values = p.values;
      break;
    }
    case MeasureKind::reliability: {
      values = connection_reliability(g, MeasureConfig{}.reliability).values;
      break;
    }
    case MeasureKind::routes: {
      const auto adm = check_admissibility(g);
      if (!adm.convergent) {
        err << "error: " << adm.diagnostic() << '\n';
        return kExitFailure;
      }
      notes.push_back("admissibility " + adm.diagnostic());
      notes.push_back(std::string("within-regime ") +
                      (adm.weight_constraint_satisfied ? "yes" : "no"));
      if (!adm.weight_constraint_satisfied) {
        err << "warning: max weight " << format_value(adm.max_weight)
            << " is not below 1/(m(n-1)) = " << format_value(adm.weight_bound) << '\n';
      }
      values = route_accessibility(g).values;
      break;
    }
    case MeasureKind::forests: {
      head += " tau=" + format_value(config.tau);
      values = forest_accessibility(g, config.tau).values;
      break;
    }
    case MeasureKind::dense_forests: {
      const double alpha = config.alpha ? *config.alpha : default_dense_alpha(g);
      head += " alpha=" + format_value(alpha) + (config.alpha ? "" : " (default)");
      notes.push_back("threshold " + format_value(dense_forest_threshold(g)));
      values = dense_forest_accessibility(g, alpha).values;
      break;
    }
    case MeasureKind::laplacian_pinv: {
      values = laplacian_pinv(g);
      break;
    }
  }

  out << head << '\n';
  if (report) {
    for (const auto& note : notes) out << note << '\n';
    out << "matrix\n";
  }
  write_matrix(out, values);
  if (report) detail::write_row_sums(out, values);
  return kExitOk;
}

struct CheckConfig {
  std::string measure = "forests";
  std::string properties = "all";  // "all" or a comma-separated list
  MeasureConfig measures;
  std::vector<Vertex> vertex_set;  // macrovertex candidate, 0-based
};

namespace detail {

inline int severity(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: return 0;
    case Verdict::holds: return 1;
    case Verdict::holds_nonstrict: return 2;
    case Verdict::violated: return 3;
  }
  return 0;
}

/// Keeps the most severe report seen, and among equals the smallest margin.
struct WorstReport {
  std::optional<PropertyReport> report;
  std::optional<std::size_t> graph;
  std::size_t count = 0;

  void add(const PropertyReport& r, std::optional<std::size_t> index = std::nullopt) {
    ++count;
    if (!report || severity(r.verdict) > severity(report->verdict) ||
        (severity(r.verdict) == severity(report->verdict) && r.margin < report->margin)) {
      report = r;
      graph = index;
    }
  }
};

inline std::vector<Property> select_properties(const CheckConfig& config, MeasureKind kind,
                                               bool& explicit_list) {
  explicit_list = config.properties != "all";
  std::vector<Property> out;
  if (!explicit_list) {
    out.assign(kTableRows.begin(), kTableRows.end());
    out.push_back(Property::metric);
    out.push_back(Property::connectivity);
    if (kind == MeasureKind::forests) out.push_back(Property::doubly_stochastic);
    if (!config.vertex_set.empty()) out.push_back(Property::macrovertex);
    return out;
  }
  std::string_view rest = config.properties;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto name = rest.substr(0, comma);
    const auto p = parse_property(name);
    if (!p) throw PreconditionError("unknown property '" + std::string(name) + "'");
    out.push_back(*p);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

inline MeasureKind require_measure(const std::string& name) {
  const auto kind = parse_measure_kind(name);
  if (!kind) throw PreconditionError("unknown measure '" + name + "'");
  return *kind;
}

/// Every report for one property on one graph; monotonicity sweeps the
/// candidate perturbations of the measure's weight regime.
inline void check_on_graph(const Measure& m, const CheckConfig& config, const CorpusGraph& cg,
                           Property p, WorstReport& acc, std::optional<std::size_t> index) {
  if (is_monotonicity(p)) {
    const std::size_t item = p == Property::monotonicity_1   ? 0
                             : p == Property::monotonicity_2 ? 1
                                                             : 2;
    const auto candidates = candidate_perturbations(cg.graph, cg.weight_cap, cg.multiplicity);
    if (candidates.empty()) {
      PropertyReport none;
      none.property = p;
      none.measure = m.name;
      none.verdict = Verdict::not_applicable;
      acc.add(none, index);
    }
    for (const auto& pert : candidates) {
      acc.add(check_monotonicity(m, cg.graph, pert)[item], index);
    }
    return;
  }
  if (p == Property::macrovertex) {
    if (config.vertex_set.empty()) {
      throw PreconditionError("macrovertex needs --vertex-set");
    }
    acc.add(check_macrovertex(m, cg.graph, config.vertex_set), index);
    return;
  }
  acc.add(check_property(m, cg.graph, p), index);
}

inline int finish_check(const std::vector<Property>& props, const std::vector<WorstReport>& acc,
                        bool explicit_list, bool corpus, std::ostream& out,
                        std::ostream& err) {
  int status = kExitOk;
  for (std::size_t a = 0; a < props.size(); ++a) {
    const auto& r = *acc[a].report;
    out << r.serialize();
    if (corpus) {
      out << " checks=" << acc[a].count;
      if (acc[a].graph && r.witness) out << " graph=" << *acc[a].graph + 1;
    }
    out << '\n';
    if (r.verdict == Verdict::violated) status = kExitFailure;
    if (r.verdict == Verdict::not_applicable && explicit_list) {
      err << "error: " << to_string(props[a]) << " is not applicable to " << r.measure
          << " on this input\n";
      status = kExitFailure;
    }
  }
  return status;
}

/// One line: directedness, order and 1-based edges with weights.
inline std::string describe_graph(const WeightedMultigraph& g) {
  std::string out = std::string(g.is_directed() ? "directed" : "undirected") +
                    " n=" + std::to_string(g.order()) + " edges";
  for (const Edge& e : g.edges()) {
    out += " " + std::to_string(e.tail + 1) + "-" + std::to_string(e.head + 1) + ":" +
           format_value(e.weight);
  }
  return out;
}

inline CorpusGraph as_corpus_graph(const WeightedMultigraph& g, MeasureKind kind) {
  const int m = std::max(1, g.max_multiplicity());
  return {g, m, regime_weight_cap(table_regime(kind), g.order(), m)};
}

}  // namespace detail

/// Checks the selected properties on a single graph.
inline int cmd_check(const CheckConfig& config, const WeightedMultigraph& g,
                     std::ostream& out, std::ostream& err) {
  const MeasureKind kind = detail::require_measure(config.measure);
  bool explicit_list = false;
  const auto props = detail::select_properties(config, kind, explicit_list);
  MeasureConfig measures = config.measures;
  if (kind == MeasureKind::dense_forests && !measures.alpha && !g.is_directed()) {
    measures.alpha = default_dense_alpha(g);
  }
  if ((kind == MeasureKind::paths || kind == MeasureKind::reliability) &&
      !path_accessibility(g).within_regime) {
    err << "warning: some edge weight is at least epsilon0(n, m)\n";
  }
  if (kind == MeasureKind::routes && !check_admissibility(g).weight_constraint_satisfied) {
    err << "warning: some edge weight is not below 1/(m(n-1))\n";
  }
  const Measure m = make_measure(kind, measures);
  const auto cg = detail::as_corpus_graph(g, kind);
  std::vector<detail::WorstReport> acc(props.size());
  for (std::size_t a = 0; a < props.size(); ++a) {
    detail::check_on_graph(m, config, cg, props[a], acc[a], std::nullopt);
  }
  return detail::finish_check(props, acc, explicit_list, false, out, err);
}

/// Checks the selected properties over the seeded corpus of the measure's
/// regime and prints the worst report per property.
inline int cmd_check_corpus(const CheckConfig& config, std::uint64_t seed,
                            const CorpusOptions& corpus, std::ostream& out,
                            std::ostream& err) {
  const MeasureKind kind = detail::require_measure(config.measure);
  bool explicit_list = false;
  const auto props = detail::select_properties(config, kind, explicit_list);
  for (Property p : props) {
    if (p == Property::macrovertex) {
      throw PreconditionError("macrovertex is checked on a single graph only");
    }
  }
  const Measure m = make_measure(kind, config.measures);
  std::vector<detail::WorstReport> acc(props.size());
  const auto graphs = make_corpus(table_regime(kind), seed, corpus);
  for (std::size_t a = 0; a < props.size(); ++a) {
    const bool route_triangle = kind == MeasureKind::routes && props[a] == Property::triangle;
    if (route_triangle) {
      const auto tight = make_corpus(Regime::route_triangle, seed, corpus);
      for (std::size_t gi = 0; gi < tight.size(); ++gi) {
        detail::check_on_graph(m, config, tight[gi], props[a], acc[a], gi);
      }
      continue;
    }
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      detail::check_on_graph(m, config, graphs[gi], props[a], acc[a], gi);
    }
  }
  out << "# corpus regime=" << to_string(table_regime(kind)) << " seed=" << seed
      << " graphs=" << graphs.size() << '\n';
  return detail::finish_check(props, acc, explicit_list, true, out, err);
}

/// Figure orderings, the L+ merge values and the complete-digraph route
/// values; exits nonzero on any mismatch.
inline int cmd_examples(std::ostream& out) {
  int failures = 0;
  for (const auto& c : examples::run_figure_examples()) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.describe() << '\n';
    if (!c.passed()) ++failures;
  }
  auto values = examples::merge_counterexample_checks();
  for (int n = 3; n <= 6; ++n) {
    const auto more = examples::route_worked_checks(n);
    values.insert(values.end(), more.begin(), more.end());
  }
  for (const auto& v : values) {
    out << (v.passed() ? "PASS " : "FAIL ") << v.describe() << '\n';
    if (!v.passed()) ++failures;
  }
  out << (failures == 0 ? "all examples match\n"
                        : std::to_string(failures) + " example(s) mismatched\n");
  return failures == 0 ? kExitOk : kExitFailure;
}

/// Regenerates the property grid and prints it beside the published one.
inline int cmd_corpus(const Table1Options& options, std::ostream& out) {
  const Table1Result result = reproduce_table1(options);
  out << "# seed=" << options.seed << " graphs-per-regime=" << options.corpus.count
      << " cycles=" << orientation_name(options.measures.paths.orientation) << '\n';
  out << "# cells are observed/published\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-20s", "property");
  out << buf;
  for (MeasureKind c : kTableColumns) {
    std::snprintf(buf, sizeof buf, " %-14s", std::string(to_string(c)).c_str());
    out << buf;
  }
  out << '\n';
  std::vector<std::string> notes;
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%-20s", std::string(to_string(kTableRows[r])).c_str());
    out << buf;
    for (std::size_t c = 0; c < kTableColumns.size(); ++c) {
      const auto& cell = result.cells[r][c];
      const auto cmp = compare_cell(published_table()[r][c], cell);
      const std::string text = cmp.observed + "/" + cmp.expected + (cmp.ok() ? "" : "!");
      std::snprintf(buf, sizeof buf, " %-14s", text.c_str());
      out << buf;
      if (cell.witness) {
        std::string note = "witness " + cell.witness->report.serialize() + " violations=" +
                           std::to_string(cell.violated);
        if (cmp.falsified) note += " (published " + cmp.expected + ")";
        notes.push_back(note);
        notes.push_back("  graph " + detail::describe_graph(cell.witness->graph));
      }
      if (cmp.missing_witness) {
        notes.push_back("missing witness " + std::string(to_string(kTableColumns[c])) + " " +
                        std::string(to_string(kTableRows[r])));
      }
    }
    out << '\n';
  }
  for (const auto& n : notes) out << n << '\n';
  const bool match = result.matches_published();
  out << "published grid reproduced: " << (match ? "yes" : "no") << '\n';
  return match ? kExitOk : kExitFailure;
}

/// Runs a command and maps library exceptions onto exit codes.
inline int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace proxgraph::cli
