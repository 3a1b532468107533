#include "rankeq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rankeq/graph.hpp"
#include "rankeq/heuristics.hpp"
#include "rankeq/inequality.hpp"
#include "rankeq/pagerank.hpp"

namespace rankeq::cli {
namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string strategy = "teleport";
  std::string heuristic = "cxrx";
  std::size_t budget = 1000;
  PageRankConfig pagerank;
  bool yaml = false;
};

const std::vector<std::string> kStrategies = {"teleport", "loop", "loopall"};
const std::vector<std::string> kHeuristics = {"cxrx", "cxsx", "cxsr", "crrx",
                                              "crsx", "crsr", "best"};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "MatrixMarket coordinate file")->required();
  cmd->add_option("--strategy", cfg.strategy, "Dead-end handling: teleport, loop or loopall")
      ->transform(CLI::IsMember(kStrategies, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--alpha", cfg.pagerank.alpha, "Damping factor in (0,1)")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double a = 0.0;
            try {
              a = std::stod(s);
            } catch (const std::exception&) {
              return "alpha must be a number";
            }
            return a > 0.0 && a < 1.0 ? std::string() : "alpha must lie in (0,1)";
          },
          "(0,1)"))
      ->capture_default_str();
  cmd->add_option("--tolerance", cfg.pagerank.tolerance, "L1 convergence tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--max-iter", cfg.pagerank.max_iterations, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--output", cfg.output, "Write to this file instead of standard output");
}

std::string graph_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void warn_if_unconverged(std::ostream& err, const PageRankResult& r, const RunConfig& cfg) {
  if (!r.converged)
    fmt::print(err, "warning: PageRank did not converge within {} iterations\n",
               cfg.pagerank.max_iterations);
}

void cmd_gini(const RunConfig& cfg, const DirectedGraph& g, std::ostream& out, std::ostream& err) {
  const auto result = pagerank(g, parse_dead_end_strategy(cfg.strategy), cfg.pagerank);
  warn_if_unconverged(err, result, cfg);
  const double value = gini(lorenz_curve(result.ranks));
  if (cfg.yaml) {
    fmt::print(out, "graph: {}\n", graph_name(cfg.input));
    fmt::print(out, "vertices: {}\n", g.vertex_count());
    fmt::print(out, "edges: {}\n", g.edge_count());
    fmt::print(out, "strategy: {}\n", cfg.strategy);
    fmt::print(out, "alpha: {}\n", cfg.pagerank.alpha);
    fmt::print(out, "tolerance: {}\n", cfg.pagerank.tolerance);
    fmt::print(out, "iterations: {}\n", result.iterations);
    fmt::print(out, "gini: {}\n", value);
  } else {
    fmt::print(out, "{}: vertices={} edges={} strategy={} converged={} gini={}\n",
               graph_name(cfg.input), g.vertex_count(), g.edge_count(), cfg.strategy,
               result.converged, value);
  }
}

void cmd_lorenz(const RunConfig& cfg, const DirectedGraph& g, std::ostream& out,
                std::ostream& err) {
  const auto result = pagerank(g, parse_dead_end_strategy(cfg.strategy), cfg.pagerank);
  warn_if_unconverged(err, result, cfg);
  write_lorenz_csv(out, lorenz_curve(result.ranks));
}

// Vertex ids are written 1-based, as in the input file.
void cmd_minimize(const RunConfig& cfg, DirectedGraph g, std::ostream& out, std::ostream& err) {
  const auto trace = run_minimization(std::move(g), parse_heuristic(cfg.heuristic), cfg.budget,
                                      parse_dead_end_strategy(cfg.strategy), cfg.pagerank);
  out << "step,source,target,gini\n";
  fmt::print(out, "0,,,{}\n", trace.initial_gini);
  std::size_t unconverged = trace.initial_converged ? 0 : 1;
  for (const auto& s : trace.steps) {
    fmt::print(out, "{},{},{},{}\n", s.step, s.edge.source + 1, s.edge.target + 1, s.gini);
    if (!s.converged) ++unconverged;
  }
  if (unconverged)
    fmt::print(err, "warning: PageRank did not converge within {} iterations in {} solve(s)\n",
               cfg.pagerank.max_iterations, unconverged);
  if (trace.exhausted)
    fmt::print(err, "note: stopped after {} of {} steps, no valid edge remains\n",
               trace.steps.size(), cfg.budget);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PageRank inequality measurement and Gini minimization"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gini_cmd = app.add_subcommand("gini", "Gini coefficient of PageRank values");
  add_common_options(gini_cmd, cfg);
  gini_cmd->add_flag("--yaml", cfg.yaml, "Emit a YAML report");

  auto* lorenz_cmd = app.add_subcommand("lorenz", "100-sample Lorenz curve of PageRank values as CSV");
  add_common_options(lorenz_cmd, cfg);

  auto* min_cmd = app.add_subcommand("minimize", "Add edges heuristically to lower the Gini coefficient");
  add_common_options(min_cmd, cfg);
  min_cmd->add_option("--heuristic", cfg.heuristic, "cxrx, cxsx, cxsr, crrx, crsx, crsr or best")
      ->transform(CLI::IsMember(kHeuristics, CLI::ignore_case))
      ->capture_default_str();
  min_cmd->add_option("--budget", cfg.budget, "Number of edges to add")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    fmt::print(err, "{}", app.help());
    return kUsageError;
  }

  DirectedGraph g;
  try {
    g = load_matrix_market_file(cfg.input);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}: {}\n", cfg.input, e.what());
    return kInputError;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      fmt::print(err, "error: cannot write '{}'\n", cfg.output);
      return kInputError;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    if (gini_cmd->parsed()) cmd_gini(cfg, g, sink, err);
    else if (lorenz_cmd->parsed()) cmd_lorenz(cfg, g, sink, err);
    else cmd_minimize(cfg, std::move(g), sink, err);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInputError;
  }
  return kSuccess;
}

}  // namespace rankeq::cli
