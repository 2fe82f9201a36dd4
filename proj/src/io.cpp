#include "mtree/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace mtree {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

int parse_id(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("bad vertex id: " + token);
  }
  if (used != token.size() || value < 0) throw ParseError("bad vertex id: " + token);
  return value;
}

Rational parse_value(const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string serialize_graph(const GraphFile& gf) {
  std::ostringstream out;
  for (const auto& [key, value] : gf.meta) out << "meta " << key << ' ' << value << '\n';
  for (int v = 0; v < gf.graph.vertex_count(); ++v) {
    out << "v " << v << ' ' << format_rational(gf.graph.density(v)) << '\n';
  }
  for (const auto& [u, v] : gf.graph.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

GraphFile parse_graph(const std::string& text) {
  std::map<std::string, std::string> meta;
  std::map<int, Rational> densities;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "meta" && tokens.size() >= 3) {
      std::string value = tokens[2];
      for (std::size_t i = 3; i < tokens.size(); ++i) value += ' ' + tokens[i];
      meta[tokens[1]] = value;
    } else if (tokens[0] == "v" && tokens.size() == 3) {
      const int id = parse_id(tokens[1]);
      const Rational f = parse_value(tokens[2]);
      if (f < 0) throw ParseError("negative density for vertex " + tokens[1]);
      if (!densities.emplace(id, f).second) {
        throw ParseError("duplicate vertex id " + tokens[1]);
      }
    } else if (tokens[0] == "e" && tokens.size() == 3) {
      edges.emplace_back(parse_id(tokens[1]), parse_id(tokens[2]));
    } else {
      throw ParseError("unrecognized line: " + line);
    }
  }
  const int n = static_cast<int>(densities.size());
  std::vector<Rational> f(n);
  for (const auto& [id, value] : densities) {
    if (id >= n) throw ParseError("vertex ids are not contiguous from 0");
    f[id] = value;
  }
  GraphFile gf;
  gf.meta = std::move(meta);
  gf.graph = DensityGraph(std::move(f), {});
  for (const auto& [u, v] : edges) {
    try {
      gf.graph.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return gf;
}

std::string serialize_decomposition(const Decomposition& d) {
  std::ostringstream out;
  out << "variant " << variant_name(d.variant) << '\n';
  for (const auto& t : d.trees) {
    out << "tree " << t.root << '\n';
    for (const auto& [v, value] : t.values) {
      out << "n " << v << ' ' << format_rational(value) << '\n';
    }
    for (const auto& [u, v] : t.edges) out << "te " << u << ' ' << v << '\n';
  }
  return out.str();
}

Decomposition parse_decomposition(const std::string& text) {
  Decomposition d;
  bool have_variant = false;
  bool in_tree = false;
  auto finish_tree = [&] {
    if (!in_tree) return;
    const MonotoneTree& t = d.trees.back();
    if (!t.contains(t.root)) throw ParseError("tree root has no value entry");
    for (const auto& [u, v] : t.edges) {
      if (!t.contains(u) || !t.contains(v)) {
        throw ParseError("tree edge endpoint outside the tree's node set");
      }
    }
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "variant" && tokens.size() == 2) {
      if (have_variant) throw ParseError("duplicate variant line");
      try {
        d.variant = variant_from_name(tokens[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      have_variant = true;
    } else if (tokens[0] == "tree" && tokens.size() == 2) {
      finish_tree();
      MonotoneTree t;
      t.root = parse_id(tokens[1]);
      d.trees.push_back(std::move(t));
      in_tree = true;
    } else if (tokens[0] == "n" && tokens.size() == 3) {
      if (!in_tree) throw ParseError("node line outside a tree block");
      const int id = parse_id(tokens[1]);
      const Rational value = parse_value(tokens[2]);
      if (value <= 0) throw ParseError("non-positive node value for " + tokens[1]);
      if (!d.trees.back().values.emplace(id, value).second) {
        throw ParseError("duplicate node " + tokens[1] + " in tree");
      }
    } else if (tokens[0] == "te" && tokens.size() == 3) {
      if (!in_tree) throw ParseError("edge line outside a tree block");
      Edge e;
      try {
        e = make_edge(parse_id(tokens[1]), parse_id(tokens[2]));
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
      }
      if (!d.trees.back().edges.insert(e).second) {
        throw ParseError("duplicate tree edge in line: " + line);
      }
    } else {
      throw ParseError("unrecognized line: " + line);
    }
  }
  if (!have_variant) throw ParseError("missing variant line");
  finish_tree();
  return d;
}

std::string to_dot(const DensityGraph& g, const Decomposition* d) {
  static const char* kPalette[] = {"red",    "blue",   "darkgreen", "orange",
                                   "purple", "brown",  "magenta",   "cyan4",
                                   "gold3",  "indigo", "firebrick", "steelblue"};
  constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));
  auto color_of = [&](int tree_index) { return kPalette[tree_index % kPaletteSize]; };

  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=ellipse];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v << ':' << format_rational(g.density(v)) << '"';
    if (d != nullptr) {
      // Color class of the first tree containing the vertex.
      for (int i = 0; i < d->size(); ++i) {
        if (d->trees[i].contains(v)) {
          out << ", color=" << color_of(i);
          if (d->trees[i].root == v) out << ", penwidth=2.5";
          break;
        }
      }
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (d != nullptr) {
      int owner = -1;
      for (int i = 0; i < d->size() && owner == -1; ++i) {
        if (d->trees[i].edges.count({u, v}) != 0) owner = i;
      }
      if (owner != -1) {
        out << " [color=" << color_of(owner) << ", penwidth=2.5]";
      } else {
        out << " [color=gray]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace mtree
