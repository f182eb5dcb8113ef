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

// proxgraph: compute proximity matrices, check their properties, and
// reproduce the worked examples and the property grid.
//
//   proxgraph compute forests --graph samples/k2.graph
//   proxgraph check routes all --graph samples/star_with_chord.graph
//   proxgraph check forests all --seed 1
//   proxgraph examples
//   proxgraph corpus --seed 1

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proxgraph/cli.hpp"

namespace {

using proxgraph::PathOptions;
namespace cli = proxgraph::cli;

const std::map<std::string, PathOptions::CycleOrientation> kOrientations = {
    {"both", PathOptions::CycleOrientation::both},
    {"once", PathOptions::CycleOrientation::once},
};

const std::map<std::string, PathOptions::Diagonal> kDiagonals = {
    {"cycles", PathOptions::Diagonal::cycles_and_trivial},
    {"trivial", PathOptions::Diagonal::trivial_only},
};

const std::map<std::string, cli::OutputMode> kModes = {
    {"matrix", cli::OutputMode::matrix},
    {"report", cli::OutputMode::report},
};

std::vector<proxgraph::Vertex> to_zero_based(const std::vector<int>& one_based) {
  std::vector<proxgraph::Vertex> out;
  for (int v : one_based) {
    if (v < 1) throw proxgraph::PreconditionError("vertex ids are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximity measures for weighted multigraphs"};
  app.require_subcommand(1);

  cli::RunConfig run;
  std::string compute_graph;
  std::optional<double> alpha;
  auto* compute = app.add_subcommand("compute", "Print a proximity matrix");
  compute->add_option("measure", run.measure,
                      "paths|reliability|routes|forests|dense-forests|laplacian-pinv|qk")
      ->required()
      ->check(CLI::IsMember({"paths", "reliability", "routes", "forests", "dense-forests",
                             "laplacian-pinv", "qk"}));
  compute->add_option("--graph", compute_graph, "Graph file")->required();
  compute->add_option("--tau", run.tau, "Forest parameter")->capture_default_str();
  compute->add_option("--alpha", alpha, "Dense-forest parameter (default half the threshold)");
  compute->add_option("--scale", run.scale, "Multiply every weight first")
      ->capture_default_str();
  compute->add_option("--format", run.mode, "matrix|report")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  compute->add_option("--cycles", run.paths.orientation, "Undirected path cycles: both|once")
      ->transform(CLI::CheckedTransformer(kOrientations, CLI::ignore_case));
  compute->add_option("--diagonal", run.paths.diagonal, "Path diagonal: cycles|trivial")
      ->transform(CLI::CheckedTransformer(kDiagonals, CLI::ignore_case));

  cli::CheckConfig check;
  std::string check_graph;
  std::uint64_t check_seed = 1;
  int check_count = 200;
  std::vector<int> vertex_set;
  std::optional<double> check_alpha;
  auto* check_cmd = app.add_subcommand("check", "Check properties of a measure");
  check_cmd->add_option("measure", check.measure, "Measure name")->required();
  check_cmd->add_option("properties", check.properties,
                        "all, or a comma-separated list of property names")
      ->capture_default_str();
  auto* graph_opt = check_cmd->add_option("--graph", check_graph, "Graph file");
  auto* seed_opt = check_cmd->add_option("--seed", check_seed, "Check the seeded corpus");
  graph_opt->excludes(seed_opt);
  check_cmd->add_option("--count", check_count, "Corpus size")->capture_default_str();
  check_cmd->add_option("--tau", check.measures.tau, "Forest parameter")->capture_default_str();
  check_cmd->add_option("--alpha", check_alpha, "Dense-forest parameter");
  check_cmd->add_option("--cycles", check.measures.paths.orientation,
                        "Undirected path cycles: both|once")
      ->transform(CLI::CheckedTransformer(kOrientations, CLI::ignore_case));
  check_cmd->add_option("--vertex-set", vertex_set, "Macrovertex candidate, 1-based")
      ->delimiter(',');

  app.add_subcommand("examples", "Reproduce the worked examples");

  proxgraph::Table1Options table;
  auto* corpus = app.add_subcommand("corpus", "Regenerate the property grid");
  corpus->add_option("--seed", table.seed, "Corpus seed")->capture_default_str();
  corpus->add_option("--count", table.corpus.count, "Graphs per regime")->capture_default_str();
  corpus->add_option("--cycles", table.measures.paths.orientation,
                     "Undirected path cycles: both|once")
      ->transform(CLI::CheckedTransformer(kOrientations, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitParseError;
  }

  if (*compute) {
    return cli::guarded(
        [&] {
          run.alpha = alpha;
          return cli::cmd_compute(run, cli::load_graph(compute_graph), std::cout, std::cerr);
        },
        std::cerr);
  }
  if (*check_cmd) {
    return cli::guarded(
        [&] {
          check.measures.alpha = check_alpha;
          check.vertex_set = to_zero_based(vertex_set);
          if (!check_graph.empty()) {
            return cli::cmd_check(check, cli::load_graph(check_graph), std::cout, std::cerr);
          }
          if (seed_opt->count() == 0) {
            throw proxgraph::PreconditionError("check needs --graph or --seed");
          }
          proxgraph::CorpusOptions options;
          options.count = check_count;
          return cli::cmd_check_corpus(check, check_seed, options, std::cout, std::cerr);
        },
        std::cerr);
  }
  if (app.got_subcommand("examples")) {
    return cli::guarded([&] { return cli::cmd_examples(std::cout); }, std::cerr);
  }
  return cli::guarded([&] { return cli::cmd_corpus(table, std::cout); }, std::cerr);
}
