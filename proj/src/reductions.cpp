#include "mtree/reductions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mtree {

namespace {

void check_instance(const SetCoverInstance& sc) {
  if (sc.universe_size < 0) throw std::invalid_argument("negative universe size");
  for (const auto& s : sc.sets) {
    for (int e : s) {
      if (e < 0 || e >= sc.universe_size) {
        throw std::invalid_argument("set element out of universe range");
      }
    }
  }
}

void check_instance(const VertexCoverInstance& vc) {
  if (vc.vertices < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : vc.edges) {
    if (u < 0 || v >= vc.vertices || u >= v) {
      throw std::invalid_argument("edge endpoint out of range or non-canonical");
    }
  }
}

std::vector<bool> covered_elements(const SetCoverInstance& sc, const std::vector<int>& cover) {
  std::vector<bool> covered(sc.universe_size, false);
  for (int i : cover) {
    if (i < 0 || i >= static_cast<int>(sc.sets.size())) {
      throw std::invalid_argument("cover set index out of range");
    }
    for (int e : sc.sets[i]) covered[e] = true;
  }
  return covered;
}

}  // namespace

bool satisfies_sc1(const SetCoverInstance& sc) {
  check_instance(sc);
  const int m = static_cast<int>(sc.sets.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int common = 0;
      for (int e : sc.sets[i]) common += sc.sets[j].count(e);
      if (common > 1) return false;
    }
  }
  return true;
}

bool satisfies_common_neighbor_restriction(const VertexCoverInstance& vc) {
  check_instance(vc);
  std::vector<std::vector<int>> adj(vc.vertices);
  for (const auto& [u, v] : vc.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Count, per unordered vertex pair, how many common neighbors they have.
  std::map<std::pair<int, int>, int> shared;
  for (int w = 0; w < vc.vertices; ++w) {
    const auto& nb = adj[w];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const auto key = std::minmax(nb[a], nb[b]);
        if (++shared[key] > 1) return false;
      }
    }
  }
  return true;
}

DensityGraph sc1_to_density_graph(const SetCoverInstance& sc, Sc1IdMap* ids) {
  if (!satisfies_sc1(sc)) throw std::invalid_argument("instance violates SC-1");
  const int m = static_cast<int>(sc.sets.size());
  DensityGraph g(m + sc.universe_size);
  for (int i = 0; i < m; ++i) {
    g.set_density(i, Rational(static_cast<int>(sc.sets[i].size())));
    for (int e : sc.sets[i]) g.add_edge(i, m + e);
  }
  for (int e = 0; e < sc.universe_size; ++e) g.set_density(m + e, Rational(1));
  if (ids != nullptr) {
    ids->set_node.resize(m);
    std::iota(ids->set_node.begin(), ids->set_node.end(), 0);
    ids->element_node.resize(sc.universe_size);
    std::iota(ids->element_node.begin(), ids->element_node.end(), m);
  }
  return g;
}

Decomposition mtree_set_from_cover(const SetCoverInstance& sc, const std::vector<int>& cover,
                                   const DensityGraph& g, bool complete) {
  if (g != sc1_to_density_graph(sc)) {
    throw std::invalid_argument("graph does not match the set cover instance");
  }
  const auto covered = covered_elements(sc, cover);
  for (int e = 0; e < sc.universe_size; ++e) {
    if (!covered[e]) throw std::invalid_argument("cover misses an element");
  }
  std::vector<int> sorted_cover = cover;
  std::sort(sorted_cover.begin(), sorted_cover.end());
  if (std::adjacent_find(sorted_cover.begin(), sorted_cover.end()) != sorted_cover.end()) {
    throw std::invalid_argument("cover lists a set twice");
  }

  const int m = static_cast<int>(sc.sets.size());
  std::vector<bool> in_cover(m, false);
  for (int i : sorted_cover) in_cover[i] = true;

  // Representative cover set of each element: smallest index.
  std::vector<int> rep(sc.universe_size, -1);
  for (int i : sorted_cover) {
    for (int e : sc.sets[i]) {
      if (rep[e] == -1) rep[e] = i;
    }
  }
  // Cover sets containing each element (for the complete-variant splitting).
  std::vector<std::vector<int>> cover_sets_of(sc.universe_size);
  for (int i : sorted_cover) {
    for (int e : sc.sets[i]) cover_sets_of[e].push_back(i);
  }

  Decomposition d;
  d.variant = complete ? Variant::CM : Variant::M;
  std::map<int, MonotoneTree*> tree_of;  // by cover set index
  for (int i : sorted_cover) {
    MonotoneTree t;
    t.root = i;
    t.values[i] = g.density(i);
    d.trees.push_back(std::move(t));
  }
  for (std::size_t a = 0; a < sorted_cover.size(); ++a) {
    tree_of[sorted_cover[a]] = &d.trees[a];
  }

  for (int e = 0; e < sc.universe_size; ++e) {
    const int share = static_cast<int>(cover_sets_of[e].size());
    if (complete && share > 1) {
      // Split the element's unit value across all covering trees so every
      // incident edge ends up inside some component.
      const Rational part = Rational(1) / share;
      for (int j : cover_sets_of[e]) {
        MonotoneTree& t = *tree_of[j];
        t.values[m + e] = part;
        t.edges.insert(make_edge(j, m + e));
        for (int l = 0; l < m; ++l) {
          if (in_cover[l] || sc.sets[l].count(e) == 0) continue;
          t.values[l] += part;
          t.edges.insert(make_edge(l, m + e));
        }
      }
    } else {
      MonotoneTree& t = *tree_of[rep[e]];
      t.values[m + e] = 1;
      t.edges.insert(make_edge(rep[e], m + e));
      for (int l = 0; l < m; ++l) {
        if (in_cover[l] || sc.sets[l].count(e) == 0) continue;
        t.values[l] += 1;
        t.edges.insert(make_edge(l, m + e));
      }
    }
  }
  return d;
}

std::vector<int> cover_from_mtree_set(const SetCoverInstance& sc, const DensityGraph& g,
                                      const Decomposition& d) {
  if (g != sc1_to_density_graph(sc)) {
    throw std::invalid_argument("graph does not match the set cover instance");
  }
  if (!validate_decomposition(g, d).ok) {
    throw std::invalid_argument("decomposition does not validate");
  }
  const int m = static_cast<int>(sc.sets.size());
  std::vector<bool> chosen(m, false);
  std::vector<int> cover;
  auto take = [&](int i) {
    if (!chosen[i]) {
      chosen[i] = true;
      cover.push_back(i);
    }
  };
  for (const auto& t : d.trees) {
    if (t.root < m) take(t.root);
  }
  // Element-node roots, smallest element id first; each picks its
  // smallest-index containing set unless already covered.
  std::vector<int> element_roots;
  for (const auto& t : d.trees) {
    if (t.root >= m) element_roots.push_back(t.root - m);
  }
  std::sort(element_roots.begin(), element_roots.end());
  for (int e : element_roots) {
    bool done = false;
    for (int i = 0; i < m && !done; ++i) done = chosen[i] && sc.sets[i].count(e) != 0;
    if (done) continue;
    for (int i = 0; i < m; ++i) {
      if (sc.sets[i].count(e) != 0) {
        take(i);
        break;
      }
    }
  }
  const auto covered = covered_elements(sc, cover);
  for (int e = 0; e < sc.universe_size; ++e) {
    if (!covered[e]) throw std::logic_error("extracted cover misses an element");
  }
  return cover;
}

DensityGraph vc_to_density_graph(const VertexCoverInstance& vc, VcIdMap* ids) {
  if (!satisfies_common_neighbor_restriction(vc)) {
    throw std::invalid_argument("instance violates the common-neighbor restriction");
  }
  std::vector<Edge> sorted_edges = vc.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end()) {
    throw std::invalid_argument("duplicate edge in instance");
  }
  const int n = vc.vertices;
  DensityGraph g(n + static_cast<int>(sorted_edges.size()));
  for (int i = 0; i < static_cast<int>(sorted_edges.size()); ++i) {
    const auto& [u, v] = sorted_edges[i];
    g.set_density(n + i, Rational(1));
    g.add_edge(u, n + i);
    g.add_edge(v, n + i);
    g.set_density(u, g.density(u) + 1);
    g.set_density(v, g.density(v) + 1);
  }
  if (ids != nullptr) {
    ids->vertex_node.resize(n);
    std::iota(ids->vertex_node.begin(), ids->vertex_node.end(), 0);
    ids->edge_node.resize(sorted_edges.size());
    std::iota(ids->edge_node.begin(), ids->edge_node.end(), n);
  }
  return g;
}

namespace {

// Smallest subset of `sets` (bitmasks) whose union is `target`, by
// enumeration in increasing size.
int min_cover_size(const std::vector<std::uint64_t>& sets, std::uint64_t target,
                   const char* what) {
  const int m = static_cast<int>(sets.size());
  if (m > 20) throw std::invalid_argument(std::string("instance too large for ") + what);
  std::uint64_t all = 0;
  for (auto s : sets) all |= s;
  if ((all & target) != target) {
    throw std::invalid_argument(std::string("no cover exists for ") + what);
  }
  if (target == 0) return 0;
  int best = m;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    std::uint64_t got = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) got |= sets[i];
    }
    if ((got & target) == target) best = size;
  }
  return best;
}

}  // namespace

int brute_force_set_cover(const SetCoverInstance& sc) {
  check_instance(sc);
  if (sc.universe_size > 62) throw std::invalid_argument("universe too large for brute force");
  std::vector<std::uint64_t> masks;
  masks.reserve(sc.sets.size());
  for (const auto& s : sc.sets) {
    std::uint64_t m = 0;
    for (int e : s) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  std::uint64_t target = sc.universe_size == 0
                             ? 0
                             : (std::uint64_t{1} << sc.universe_size) - 1;
  return min_cover_size(masks, target, "set cover");
}

int brute_force_vertex_cover(const VertexCoverInstance& vc) {
  check_instance(vc);
  if (static_cast<int>(vc.edges.size()) > 62) {
    throw std::invalid_argument("too many edges for brute force");
  }
  // A vertex cover is a set cover of the edge set by vertex stars.
  std::vector<std::uint64_t> stars(vc.vertices, 0);
  for (int i = 0; i < static_cast<int>(vc.edges.size()); ++i) {
    stars[vc.edges[i].first] |= std::uint64_t{1} << i;
    stars[vc.edges[i].second] |= std::uint64_t{1} << i;
  }
  std::uint64_t target = vc.edges.empty()
                             ? 0
                             : (std::uint64_t{1} << vc.edges.size()) - 1;
  return min_cover_size(stars, target, "vertex cover");
}

HostShape host_shape_from_name(const std::string& name) {
  if (name == "tree") return HostShape::kTree;
  if (name == "cactus") return HostShape::kCactus;
  if (name == "general") return HostShape::kGeneral;
  throw std::invalid_argument("unknown host shape: " + name);
}

std::string host_shape_name(HostShape shape) {
  switch (shape) {
    case HostShape::kTree: return "tree";
    case HostShape::kCactus: return "cactus";
    case HostShape::kGeneral: return "general";
  }
  throw std::logic_error("unreachable");
}

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Rational> random_densities(Rng& rng, int n, int max_density) {
  std::vector<Rational> f(n);
  for (auto& x : f) x = uniform(rng, 0, max_density);
  return f;
}

std::vector<Edge> random_tree_edges(Rng& rng, int n) {
  std::vector<Edge> edges;
  edges.reserve(std::max(0, n - 1));
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(uniform(rng, 0, v - 1), v));
  return edges;
}

}  // namespace

DensityGraph gen_random_tree(Rng& rng, int n, int max_density) {
  if (n <= 0) throw std::invalid_argument("need at least one vertex");
  return DensityGraph(random_densities(rng, n, max_density), random_tree_edges(rng, n));
}

DensityGraph gen_random_connected_graph(Rng& rng, int n, int extra_edges, int max_density) {
  if (n <= 0) throw std::invalid_argument("need at least one vertex");
  DensityGraph g(random_densities(rng, n, max_density), random_tree_edges(rng, n));
  const int max_extra = n * (n - 1) / 2 - (n - 1);
  int remaining = std::min(extra_edges, max_extra);
  int attempts = 0;
  while (remaining > 0 && attempts < 1000 * extra_edges + 1000) {
    ++attempts;
    const int u = uniform(rng, 0, n - 1);
    const int v = uniform(rng, 0, n - 1);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --remaining;
  }
  return g;
}

DensityGraph gen_random_cactus(Rng& rng, int n, int max_cycles, int max_density) {
  if (n <= 0) throw std::invalid_argument("need at least one vertex");
  // Grow from a single vertex by attaching pendant vertices or whole cycles;
  // every cycle shares exactly one vertex with the rest, so each block is an
  // edge or a simple cycle.
  std::vector<Edge> edges;
  int built = 1;
  int cycles = 0;
  while (built < n) {
    const int at = uniform(rng, 0, built - 1);
    const int room = n - built;
    const bool make_cycle = cycles < max_cycles && room >= 2 && uniform(rng, 0, 2) != 0;
    if (make_cycle) {
      const int extra = uniform(rng, 2, std::min(room, 4));  // cycle length extra + 1
      int prev = at;
      for (int i = 0; i < extra; ++i) {
        edges.push_back(make_edge(prev, built));
        prev = built++;
      }
      edges.push_back(make_edge(prev, at));
      ++cycles;
    } else {
      edges.push_back(make_edge(at, built++));
    }
  }
  return DensityGraph(random_densities(rng, n, max_density), edges);
}

SetCoverInstance gen_random_sc1(Rng& rng, int num_sets, int universe_size) {
  if (num_sets <= 0 || universe_size <= 0) {
    throw std::invalid_argument("need at least one set and one element");
  }
  SetCoverInstance sc;
  sc.universe_size = universe_size;
  std::vector<int> elements(universe_size);
  std::iota(elements.begin(), elements.end(), 0);
  for (int i = 0; i < num_sets; ++i) {
    // Sample a set, then drop elements until it shares at most one element
    // with every earlier set.
    std::shuffle(elements.begin(), elements.end(), rng);
    const int want = uniform(rng, 1, std::max(1, universe_size / 2 + 1));
    std::set<int> s;
    for (int e : elements) {
      if (static_cast<int>(s.size()) == want) break;
      bool ok = true;
      for (const auto& t : sc.sets) {
        if (t.count(e) == 0) continue;
        int common = 0;
        for (int x : s) common += t.count(x);
        if (common >= 1) {
          ok = false;
          break;
        }
      }
      if (ok) s.insert(e);
    }
    sc.sets.push_back(std::move(s));
  }
  // Any still-uncovered element can join any set without breaking SC-1,
  // because no set contains it yet.
  std::vector<bool> covered(universe_size, false);
  for (const auto& s : sc.sets) {
    for (int e : s) covered[e] = true;
  }
  for (int e = 0; e < universe_size; ++e) {
    if (!covered[e]) sc.sets[uniform(rng, 0, num_sets - 1)].insert(e);
  }
  return sc;
}

VertexCoverInstance gen_random_restricted_vc(Rng& rng, int n) {
  if (n <= 0) throw std::invalid_argument("need at least one vertex");
  VertexCoverInstance vc;
  vc.vertices = n;
  // Cap edges at n: sparse instances keep the vertex-cover gadgets small
  // enough for exhaustive cross-checks while still mixing trees and cycles.
  const int attempts = 3 * n;
  for (int i = 0; i < attempts && static_cast<int>(vc.edges.size()) < n; ++i) {
    const int u = uniform(rng, 0, n - 1);
    const int v = uniform(rng, 0, n - 1);
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    if (std::find(vc.edges.begin(), vc.edges.end(), e) != vc.edges.end()) continue;
    vc.edges.push_back(e);
    if (!satisfies_common_neighbor_restriction(vc)) vc.edges.pop_back();
  }
  std::sort(vc.edges.begin(), vc.edges.end());
  return vc;
}

PlantedInstance gen_planted(std::uint64_t seed, int n, int k, HostShape shape) {
  if (n <= 0 || k <= 0) throw std::invalid_argument("need positive n and k");
  Rng rng(seed);
  DensityGraph host = [&] {
    switch (shape) {
      case HostShape::kTree: return gen_random_tree(rng, n, 0);
      case HostShape::kCactus: return gen_random_cactus(rng, n, std::max(1, n / 4), 0);
      case HostShape::kGeneral:
        return gen_random_connected_graph(rng, n, uniform(rng, 0, n / 2), 0);
    }
    throw std::logic_error("unreachable");
  }();

  PlantedInstance out;
  out.graph = DensityGraph(std::vector<Rational>(n, Rational(0)), host.edges());
  out.decomposition.variant = Variant::M;
  for (int t = 0; t < k; ++t) {
    // Grow a random subtree from a random root with values that never
    // increase away from the root.
    MonotoneTree tree;
    tree.root = uniform(rng, 0, n - 1);
    std::map<int, int> level;  // integer values, for easy monotone sampling
    level[tree.root] = uniform(rng, 1, 6);
    tree.values[tree.root] = level[tree.root];
    std::vector<int> frontier = {tree.root};
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      for (int w : host.neighbors(v)) {
        if (tree.contains(w) || uniform(rng, 0, 2) == 0) continue;
        level[w] = uniform(rng, 1, level[v]);
        tree.values[w] = level[w];
        tree.edges.insert(make_edge(v, w));
        frontier.push_back(w);
      }
    }
    for (const auto& [v, x] : tree.values) {
      out.graph.set_density(v, out.graph.density(v) + x);
    }
    out.decomposition.trees.push_back(std::move(tree));
  }
  return out;
}

}  // namespace mtree
