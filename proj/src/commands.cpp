#include "mtree/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mtree/approx.hpp"
#include "mtree/exact.hpp"
#include "mtree/io.hpp"
#include "mtree/reductions.hpp"
#include "mtree/structure.hpp"
#include "mtree/sweep.hpp"

namespace mtree {

namespace {

void print_violations(const ValidationReport& report, std::ostream& out) {
  for (const auto& v : report.violations) {
    out << "VIOLATION " << v.kind;
    for (int id : v.ids) out << ' ' << id;
    out << '\n';
  }
}

OracleOptions oracle_options_from_env() {
  OracleOptions options;
  if (const char* env = std::getenv("MTREE_ORACLE_BUDGET")) {
    try {
      options.candidate_budget = std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MTREE_ORACLE_BUDGET is not an integer");
    }
  }
  return options;
}

}  // namespace

int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  GraphFile gf;
  try {
    gf = parse_graph(read_text_file(args.input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }

  Variant variant;
  Decomposition d;
  try {
    variant = variant_from_name(args.variant);
    const bool variant_ok =
        (args.algo == "tree" && (variant == Variant::M || variant == Variant::SM)) ||
        ((args.algo == "naive" || args.algo == "spanning2g") && variant == Variant::M) ||
        (args.algo == "cactus-sm" && variant == Variant::SM) || args.algo == "exact";
    if (!variant_ok) {
      throw std::invalid_argument("algorithm does not produce variant " + args.variant);
    }
    if (args.algo == "tree") {
      if (!is_acyclic(gf.graph)) throw std::invalid_argument("input graph is not a tree");
      d = decompose_tree(gf.graph);
    } else if (args.algo == "naive") {
      d = naive_decompose(gf.graph);
    } else if (args.algo == "spanning2g") {
      d = spanning_tree_decompose(gf.graph);
    } else if (args.algo == "cactus-sm") {
      d = cactus_sm_decompose(gf.graph);
    } else if (args.algo == "exact") {
      OracleOptions options = oracle_options_from_env();
      options.strict_positive = false;
      d = exact_min(gf.graph, variant, options);
    } else {
      throw std::invalid_argument("unknown algorithm: " + args.algo);
    }
  } catch (const OracleBudgetError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  }

  d.variant = variant;
  const ValidationReport report = validate_decomposition(gf.graph, d);
  out << "k=" << d.size() << " algo=" << args.algo << " valid=" << (report.ok ? "true" : "false")
      << '\n';
  if (!report.ok) {
    print_violations(report, err);
    return kExitInvalid;
  }
  if (!args.output.empty()) {
    write_text_file(args.output, serialize_decomposition(d));
  }
  return kExitOk;
}

int run_validate(const std::string& graph_path, const std::string& decomposition_path,
                 const std::string& variant_override, std::ostream& out, std::ostream& err) {
  GraphFile gf;
  Decomposition d;
  try {
    gf = parse_graph(read_text_file(graph_path));
    d = parse_decomposition(read_text_file(decomposition_path));
    if (!variant_override.empty()) d.variant = variant_from_name(variant_override);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  ValidationReport report;
  try {
    report = validate_decomposition(gf.graph, d);
  } catch (const std::invalid_argument&) {
    // Vertex ids outside the graph: report as a violation, not a crash.
    out << "VIOLATION id-range\n";
    return kExitInvalid;
  }
  print_violations(report, out);
  return report.ok ? kExitOk : kExitInvalid;
}

int run_stats(const std::string& input_path, std::ostream& out, std::ostream& err) {
  GraphFile gf;
  try {
    gf = parse_graph(read_text_file(input_path));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  const DensityGraph& g = gf.graph;
  const bool acyclic = is_acyclic(g);
  out << "n=" << g.vertex_count() << '\n';
  out << "m=" << g.edge_count() << '\n';
  out << "components=" << connected_components(g).count << '\n';
  out << "genus=" << genus(g) << '\n';
  out << "relative_maxima=" << relative_maxima(g).size() << '\n';
  out << "is_cactus=" << (is_cactus(g) ? "true" : "false") << '\n';
  out << "is_tree=" << (is_tree(g) ? "true" : "false") << '\n';
  if (acyclic) out << "mode_forced=" << mode_forced_nodes(g).size() << '\n';
  return kExitOk;
}

int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Rng rng(args.seed);
    GraphFile gf;
    gf.meta["generator"] = args.kind;
    gf.meta["rng"] = "mt19937_64";
    gf.meta["seed"] = std::to_string(args.seed);
    std::string sidecar_path, sidecar;

    if (args.kind == "tree") {
      gf.graph = gen_random_tree(rng, args.size, 5);
    } else if (args.kind == "cactus") {
      gf.graph = gen_random_cactus(rng, args.size, 3, 5);
    } else if (args.kind == "planted") {
      const int k = args.k > 0 ? args.k : 2;
      PlantedInstance planted = gen_planted(args.seed, args.size, k, HostShape::kGeneral);
      gf.graph = planted.graph;
      gf.meta["k"] = std::to_string(k);
      sidecar_path = args.output + ".dec";
      sidecar = serialize_decomposition(planted.decomposition);
    } else if (args.kind == "sc1") {
      const int sets = args.k > 0 ? args.k : std::max(1, (args.size + 1) / 2);
      SetCoverInstance sc = gen_random_sc1(rng, sets, args.size);
      gf.graph = sc1_to_density_graph(sc);
      gf.meta["sets"] = std::to_string(sets);
      gf.meta["elements"] = std::to_string(args.size);
      sidecar_path = args.output + ".opt";
      sidecar = "optimum " + std::to_string(brute_force_set_cover(sc)) + "\n";
    } else if (args.kind == "vc") {
      VertexCoverInstance vc = gen_random_restricted_vc(rng, args.size);
      gf.graph = vc_to_density_graph(vc);
      gf.meta["vc_vertices"] = std::to_string(args.size);
      sidecar_path = args.output + ".opt";
      sidecar = "optimum " + std::to_string(brute_force_vertex_cover(vc)) + "\n";
    } else {
      throw std::invalid_argument("unknown generator kind: " + args.kind);
    }

    write_text_file(args.output, serialize_graph(gf));
    if (!sidecar_path.empty()) write_text_file(sidecar_path, sidecar);
    out << "wrote " << args.output << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ParseError& e) {
    err << "write error: " << e.what() << '\n';
    return kExitParse;
  }
}

int run_export_dot(const std::string& graph_path, const std::string& decomposition_path,
                   const std::string& output_path, std::ostream& out, std::ostream& err) {
  GraphFile gf;
  Decomposition d;
  bool have_decomposition = false;
  try {
    gf = parse_graph(read_text_file(graph_path));
    if (!decomposition_path.empty()) {
      d = parse_decomposition(read_text_file(decomposition_path));
      have_decomposition = true;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  const std::string dot = to_dot(gf.graph, have_decomposition ? &d : nullptr);
  if (output_path.empty() || output_path == "-") {
    out << dot;
  } else {
    write_text_file(output_path, dot);
    out << "wrote " << output_path << '\n';
  }
  return kExitOk;
}

}  // namespace mtree
