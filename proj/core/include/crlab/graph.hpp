#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crlab {

inline constexpr int kMaxOrder = 64;

/// Finite simple undirected graph on at most 64 vertices. Adjacency is stored
/// as one 64-bit row per vertex; rows are kept symmetric and irreflexive.
/// Graph values are treated as immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : n_(order), rows_(order, 0) {
    if (order < 0 || order > kMaxOrder) {
      throw std::invalid_argument("graph order out of range [0,64]: " +
                                  std::to_string(order));
    }
  }

  Graph(int order, std::span<const std::pair<int, int>> edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (auto r : rows_) s += std::popcount(r);
    return s / 2;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t(1) << v;
    rows_[v] |= std::uint64_t(1) << u;
  }

  std::uint64_t row(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const { return std::popcount(row(v)); }

  /// Calls f(u) for each neighbor u of v, in increasing order.
  template <typename F>
  void for_neighbors(int v, F&& f) const {
    std::uint64_t r = row(v);
    while (r) {
      int u = std::countr_zero(r);
      f(u);
      r &= r - 1;
    }
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  // Common named graphs, used throughout tests and the CLI.
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for order " + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Connected components as vertex sets; partition of V, ordered by smallest
/// member, each set sorted.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex-deleted subgraph; remaining vertices are renumbered preserving order.
Graph delete_vertex(const Graph& g, int v);

/// Deletes one edge, keeping all vertices.
Graph delete_edge(const Graph& g, int u, int v);

Graph disjoint_union(std::span<const Graph> parts);
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

/// Max over vertex pairs of shortest-path length. Throws std::domain_error on
/// disconnected input.
int diameter(const Graph& g);

Graph complement(const Graph& g);

/// Image of g under the relabeling v -> perm[v].
Graph permuted(const Graph& g, std::span<const int> perm);

/// Blocks (maximal biconnected subgraphs), cut vertices, and their incidence.
struct BlockCutTree {
  std::vector<std::vector<int>> blocks;     // vertex sets, each sorted
  std::vector<int> cut_vertices;            // sorted
  std::vector<std::vector<int>> block_cuts; // per block, its incident cut vertices
  std::vector<int> leaf_blocks;             // indices of blocks with <= 1 cut vertex
};

BlockCutTree block_cut_tree(const Graph& g);

}  // namespace crlab
