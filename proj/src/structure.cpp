#include "mtree/structure.hpp"

#include <algorithm>
#include <functional>

namespace mtree {

ComponentLabels connected_components(const DensityGraph& g) {
  const int n = g.vertex_count();
  ComponentLabels out;
  out.label.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (out.label[s] != -1) continue;
    const int id = out.count++;
    std::vector<int> stack{s};
    out.label[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (out.label[w] == -1) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

int genus(const DensityGraph& g) {
  return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

bool is_acyclic(const DensityGraph& g) { return genus(g) == 0; }

bool is_tree(const DensityGraph& g) {
  return g.vertex_count() > 0 && connected_components(g).count == 1 &&
         g.edge_count() == g.vertex_count() - 1;
}

std::set<int> relative_maxima(const DensityGraph& g) {
  const int n = g.vertex_count();
  std::set<int> out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    if (g.density(s) == 0) {
      seen[s] = 1;
      continue;
    }
    // Flood the plateau of equal-density vertices containing s. s is the
    // smallest id in it because plateaus are visited in ascending order.
    std::vector<int> plateau{s};
    std::vector<int> stack{s};
    seen[s] = 1;
    bool dominated = false;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (g.density(w) > g.density(u)) {
          dominated = true;
        } else if (g.density(w) == g.density(u) && !seen[w]) {
          seen[w] = 1;
          plateau.push_back(w);
          stack.push_back(w);
        }
      }
    }
    if (!dominated) out.insert(s);
  }
  return out;
}

BlockDecomposition biconnected_blocks(const DensityGraph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  auto emit_block = [&](const Edge& top) {
    Block block;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.edges.push_back(e);
      if (e == top) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    std::set<int> verts;
    for (const auto& [a, b] : block.edges) {
      verts.insert(a);
      verts.insert(b);
    }
    block.vertices.assign(verts.begin(), verts.end());
    out.blocks.push_back(std::move(block));
  };

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    bool skipped_parent = false;
    for (int w : g.neighbors(u)) {
      if (w == parent && !skipped_parent) {
        skipped_parent = true;
        continue;
      }
      if (disc[w] == 0) {
        ++children;
        const Edge e = make_edge(u, w);
        edge_stack.push_back(e);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != -1) out.articulation_points.insert(u);
          emit_block(e);
        }
      } else if (disc[w] < disc[u]) {
        edge_stack.push_back(make_edge(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == -1 && children > 1) out.articulation_points.insert(u);
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] == 0) dfs(s, -1);
  }
  return out;
}

bool is_cactus(const DensityGraph& g) {
  const auto blocks = biconnected_blocks(g);
  return std::all_of(blocks.blocks.begin(), blocks.blocks.end(), [](const Block& b) {
    return b.edges.size() <= b.vertices.size();
  });
}

}  // namespace mtree
