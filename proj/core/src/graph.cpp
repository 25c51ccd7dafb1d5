#include "crlab/graph.hpp"

#include <algorithm>
#include <queue>

namespace crlab {

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.add_edge(i, j);
  return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::uint64_t seen = 0;
  for (int s = 0; s < n; s++) {
    if ((seen >> s) & 1u) continue;
    // BFS over the bit rows.
    std::uint64_t comp = std::uint64_t(1) << s;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.row(v);
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    std::vector<int> verts;
    std::uint64_t c = comp;
    while (c) {
      verts.push_back(std::countr_zero(c));
      c &= c - 1;
    }
    out.push_back(std::move(verts));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("delete_vertex: vertex out of range");
  }
  Graph h(g.order() - 1);
  for (int u = 0; u < g.order(); u++) {
    if (u == v) continue;
    int uu = u < v ? u : u - 1;
    g.for_neighbors(u, [&](int w) {
      if (w == v || w <= u) return;
      int ww = w < v ? w : w - 1;
      h.add_edge(uu, ww);
    });
  }
  return h;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
  Graph h(g.order());
  for (int a = 0; a < g.order(); a++) {
    g.for_neighbors(a, [&](int b) {
      if (b <= a) return;
      if ((a == u && b == v) || (a == v && b == u)) return;
      h.add_edge(a, b);
    });
  }
  return h;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > kMaxOrder) {
    throw std::invalid_argument("disjoint_union: total order exceeds 64");
  }
  Graph g(total);
  int off = 0;
  for (const auto& p : parts) {
    for (int u = 0; u < p.order(); u++) {
      p.for_neighbors(u, [&](int v) {
        if (v > u) g.add_edge(off + u, off + v);
      });
    }
    off += p.order();
  }
  return g;
}

int diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::domain_error("diameter: empty graph");
  int best = 0;
  for (int s = 0; s < n; s++) {
    std::uint64_t seen = std::uint64_t(1) << s;
    std::uint64_t frontier = seen;
    int dist = 0;
    while (true) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.row(v);
      }
      next &= ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      dist++;
    }
    if (std::popcount(seen) != n) throw std::domain_error("diameter: graph is disconnected");
    best = std::max(best, dist);
  }
  return best;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  if (int(perm.size()) != g.order()) {
    throw std::invalid_argument("permuted: permutation size mismatch");
  }
  Graph h(g.order());
  for (int u = 0; u < g.order(); u++) {
    g.for_neighbors(u, [&](int v) {
      if (v > u) h.add_edge(perm[u], perm[v]);
    });
  }
  return h;
}

namespace {

// Iterative Hopcroft-Tarjan biconnectivity over the edge stack.
struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low, parent;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> is_cut;
  int counter = 0;

  explicit BlockFinder(const Graph& gr)
      : g(gr), num(gr.order(), -1), low(gr.order(), 0),
        parent(gr.order(), -1), is_cut(gr.order(), false) {}

  void pop_block(int u, int v) {
    std::uint64_t verts = 0;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      if (num[a] < num[u] && !(a == u && b == v)) break;
      edge_stack.pop_back();
      verts |= std::uint64_t(1) << a;
      verts |= std::uint64_t(1) << b;
      if (a == u && b == v) break;
    }
    std::vector<int> bs;
    while (verts) {
      bs.push_back(std::countr_zero(verts));
      verts &= verts - 1;
    }
    blocks.push_back(std::move(bs));
  }

  void dfs(int root) {
    struct Frame { int v; std::uint64_t rest; };
    std::vector<Frame> stack;
    num[root] = low[root] = counter++;
    stack.push_back({root, g.row(root)});
    int root_children = 0;
    while (!stack.empty()) {
      auto& fr = stack.back();
      if (fr.rest) {
        int w = std::countr_zero(fr.rest);
        fr.rest &= fr.rest - 1;
        if (num[w] == -1) {
          parent[w] = fr.v;
          edge_stack.push_back({fr.v, w});
          num[w] = low[w] = counter++;
          if (fr.v == root) root_children++;
          stack.push_back({w, g.row(w)});
        } else if (w != parent[fr.v] && num[w] < num[fr.v]) {
          edge_stack.push_back({fr.v, w});
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
      } else {
        int v = fr.v;
        stack.pop_back();
        if (stack.empty()) break;
        int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // u separates v's subtree; root cuts are decided by child count below
          if (u != root) is_cut[u] = true;
          pop_block(u, v);
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.order();
  BlockFinder bf(g);
  for (int v = 0; v < n; v++) {
    if (bf.num[v] == -1) {
      bf.dfs(v);
      if (g.degree(v) == 0) bf.blocks.push_back({v});  // isolated vertex block
    }
  }
  BlockCutTree t;
  t.blocks = std::move(bf.blocks);
  for (auto& b : t.blocks) std::sort(b.begin(), b.end());
  std::sort(t.blocks.begin(), t.blocks.end());
  for (int v = 0; v < n; v++)
    if (bf.is_cut[v]) t.cut_vertices.push_back(v);
  t.block_cuts.resize(t.blocks.size());
  for (std::size_t i = 0; i < t.blocks.size(); i++) {
    for (int v : t.blocks[i]) {
      if (bf.is_cut[v]) t.block_cuts[i].push_back(v);
    }
    if (t.block_cuts[i].size() <= 1) t.leaf_blocks.push_back(int(i));
  }
  return t;
}

}  // namespace crlab
