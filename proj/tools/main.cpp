#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mtree/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decompose density graphs into minimum sets of monotone trees"};
  app.require_subcommand(1);

  mtree::DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Run a decomposition algorithm");
  decompose->add_option("--algo", dec.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"tree", "naive", "spanning2g", "cactus-sm", "exact"}));
  decompose->add_option("--variant", dec.variant, "Decomposition variant")
      ->check(CLI::IsMember({"m", "cm", "sm", "fm"}));
  decompose->add_option("--input", dec.input, "Graph file")->required();
  decompose->add_option("--output", dec.output, "Decomposition file to write");

  std::string val_graph, val_dec, val_variant;
  auto* validate = app.add_subcommand("validate", "Validate a decomposition against a graph");
  validate->add_option("--graph", val_graph, "Graph file")->required();
  validate->add_option("--decomposition", val_dec, "Decomposition file")->required();
  validate->add_option("--variant", val_variant, "Override the file's variant")
      ->check(CLI::IsMember({"m", "cm", "sm", "fm"}));

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Print instance statistics");
  stats->add_option("--input", stats_input, "Graph file")->required();

  mtree::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", gen.kind, "Instance kind")
      ->required()
      ->check(CLI::IsMember({"tree", "cactus", "planted", "sc1", "vc"}));
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--size", gen.size, "Instance size");
  gen_cmd->add_option("--k", gen.k, "Planted tree count / SC-1 set count");
  gen_cmd->add_option("--output", gen.output, "Graph file to write")->required();

  std::string dot_graph, dot_dec, dot_output;
  auto* export_dot = app.add_subcommand("export-dot", "Render a graph as Graphviz DOT");
  export_dot->add_option("--graph", dot_graph, "Graph file")->required();
  export_dot->add_option("--decomposition", dot_dec, "Optional decomposition to color");
  export_dot->add_option("--output", dot_output, "DOT file to write ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) return mtree::run_decompose(dec, std::cout, std::cerr);
  if (validate->parsed()) {
    return mtree::run_validate(val_graph, val_dec, val_variant, std::cout, std::cerr);
  }
  if (stats->parsed()) return mtree::run_stats(stats_input, std::cout, std::cerr);
  if (gen_cmd->parsed()) return mtree::run_gen(gen, std::cout, std::cerr);
  if (export_dot->parsed()) {
    return mtree::run_export_dot(dot_graph, dot_dec, dot_output, std::cout, std::cerr);
  }
  return 0;
}
