#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using boxcub::GraphFormat;

const std::map<std::string, GraphFormat> kFormats{
    {"edge-list", GraphFormat::kEdgeList},
    {"graph6", GraphFormat::kGraph6},
};

void add_graph_input(CLI::App* cmd, boxcub::cli::GraphInput& input, const char* name) {
  cmd->add_option(name, input.path, "Graph file, or - for stdin")->required();
  cmd->add_option("--format", input.format, "Graph format: edge-list or graph6")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = boxcub::cli;
  CLI::App app{"Box and unit-cube representations of small graphs"};
  app.require_subcommand(1);

  cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants, exact values and bounds as JSON");
  add_graph_input(analyze_cmd, analyze.input, "graph");
  analyze_cmd->add_option("--oracle-limit", analyze.oracle_limit,
                          "Largest n for the exact oracles")
      ->capture_default_str();
  analyze_cmd->add_flag("--force", analyze.force, "Run the oracles up to their hard limit");

  cli::ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a verified cube representation");
  add_graph_input(construct_cmd, construct.input, "graph");
  construct_cmd->add_option("--coloring", construct.coloring, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  construct_cmd->add_option("--boxrep", construct.boxrep,
                            "oracle, or a box representation JSON file")
      ->capture_default_str();
  construct_cmd->add_option("--oracle-limit", construct.oracle_limit,
                            "Largest n for the boxicity oracle")
      ->capture_default_str();
  construct_cmd->add_flag("--force", construct.force, "Run the oracle up to its hard limit");
  construct_cmd->add_option("--out", construct.out, "Output file (default stdout)");

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a representation against a graph");
  verify_cmd->add_option("rep", verify.rep_path, "Representation JSON file")->required();
  add_graph_input(verify_cmd, verify.input, "graph");

  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Print experiment rows as CSV");
  bench_cmd->add_option("--family", bench.family, "tk or random")->required();
  bench_cmd->add_option("--k", bench.k, "Number of parts (tk)");
  bench_cmd->add_option("--n", bench.n, "Vertex counts (tk: comma list; random: one)")
      ->delimiter(',');
  bench_cmd->add_option("--count", bench.count, "Number of random graphs");
  bench_cmd->add_option("--seed", bench.seed, "Seed for mt19937_64");
  bench_cmd->add_option("--p", bench.p, "Edge probability")->capture_default_str();
  bench_cmd->add_option("--oracle-limit", bench.oracle_limit, "Largest n for the oracles")
      ->capture_default_str();

  cli::GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Print a family graph");
  generate_cmd
      ->add_option("--family", generate.family,
                   "star, multipartite, glue, complete, edgeless or random")
      ->required();
  generate_cmd->add_option("--n", generate.n, "Size parameter");
  generate_cmd->add_option("--parts", generate.parts, "Part sizes, comma separated")
      ->delimiter(',');
  generate_cmd->add_option("--p", generate.p, "Edge probability (random)")
      ->capture_default_str();
  generate_cmd->add_option("--seed", generate.seed, "Seed (random)")->capture_default_str();
  generate_cmd->add_option("--format", generate.format, "edge-list or graph6")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  if (*analyze_cmd) return cli::run_analyze(analyze);
  if (*construct_cmd) return cli::run_construct(construct);
  if (*verify_cmd) return cli::run_verify(verify);
  if (*bench_cmd) return cli::run_bench(bench);
  return cli::run_generate(generate);
}
