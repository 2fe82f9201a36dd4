#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mtree/graph.hpp"

namespace mtree {

// Rooted subtree of a host graph with strictly positive per-vertex values,
// non-increasing away from the root. A vertex belongs to the tree iff it has
// an entry in `values` (membership <=> positive value).
struct MonotoneTree {
  int root = 0;
  std::map<int, Rational> values;
  std::set<Edge> edges;

  bool contains(int v) const { return values.count(v) != 0; }
  Rational value_or_zero(int v) const {
    auto it = values.find(v);
    return it == values.end() ? Rational(0) : it->second;
  }

  bool operator==(const MonotoneTree& other) const = default;
};

enum class Variant { M, CM, SM, FM };

std::string variant_name(Variant v);         // "m", "cm", "sm", "fm"
Variant variant_from_name(const std::string& name);

struct Decomposition {
  std::vector<MonotoneTree> trees;
  Variant variant = Variant::M;

  int size() const { return static_cast<int>(trees.size()); }

  bool operator==(const Decomposition& other) const = default;
};

struct Violation {
  std::string kind;       // e.g. "sum", "monotone", "sm-intersection"
  std::vector<int> ids;   // offending vertex/edge/tree ids
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string kind, std::vector<int> ids) {
    ok = false;
    violations.push_back({std::move(kind), std::move(ids)});
  }
};

// Checks that d is a valid decomposition of g under d.variant:
//   - every tree is a monotone tree embedded in g,
//   - per-vertex values sum exactly to g's densities,
//   - CM: every edge of g with two positive-density endpoints is in a tree,
//   - SM: every pairwise tree intersection is empty or connected and acyclic,
//   - FM: every root carries the full graph density.
// Vertex ids outside g are an input error (throws std::invalid_argument).
ValidationReport validate_decomposition(const DensityGraph& g, const Decomposition& d);

// Parent of each non-root vertex when t's edges are oriented away from the
// root. Throws std::invalid_argument if t is not a tree on its vertex set.
std::map<int, int> tree_parents(const MonotoneTree& t);

// Removes the branch hanging below edge e (oriented away from the root) and
// returns (t minus the branch, the branch rooted at its top vertex). The two
// value maps partition t's. Throws if e is not a tree edge.
std::pair<MonotoneTree, MonotoneTree> cut_monotone_tree(const MonotoneTree& t, const Edge& e);

}  // namespace mtree
