#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mtree/decomposition.hpp"
#include "mtree/graph.hpp"

namespace mtree {

// Raised on any malformed input document; the CLI maps it to exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Line-based graph document:
//   meta <key> <value>     (optional; e.g. generator / seed)
//   v <id> <density>       (density "p" or "p/q", exact)
//   e <u> <v>
// Vertex ids must be the contiguous range 0..n-1. Serialization is canonical
// (sorted meta, ascending vertices, sorted edges, rationals in lowest terms)
// so equal documents are byte-identical.
struct GraphFile {
  DensityGraph graph;
  std::map<std::string, std::string> meta;

  bool operator==(const GraphFile& other) const = default;
};

std::string serialize_graph(const GraphFile& gf);
GraphFile parse_graph(const std::string& text);

// Line-based decomposition document:
//   variant <m|cm|sm|fm>
//   tree <root>            (starts a new tree)
//   n <id> <value>         (value > 0)
//   te <u> <v>             (edge inside the current tree's node set)
std::string serialize_decomposition(const Decomposition& d);
Decomposition parse_decomposition(const std::string& text);

// Graphviz document; nodes labeled "id:density". With a decomposition, each
// tree gets a color class, its edges drawn bold, and shared host edges stay
// thin gray. Valid DOT even for the empty graph.
std::string to_dot(const DensityGraph& g, const Decomposition* d = nullptr);

// Whole-file helpers; throw ParseError with the path on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mtree
