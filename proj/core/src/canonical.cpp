#include "crlab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "crlab/refine.hpp"

namespace crlab {

std::vector<std::uint64_t> adjacency_key(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> key(n <= 1 ? 0 : (std::size_t(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      if (g.has_edge(i, j)) key[bit / 64] |= std::uint64_t(1) << (bit % 64);
      bit++;
    }
  }
  return key;
}

namespace {

// Key of g under the ordering vs (position p holds vertex vs[p]).
std::vector<std::uint64_t> key_under(const Graph& g, const std::vector<int>& vs) {
  const int n = g.order();
  std::vector<std::uint64_t> key((std::size_t(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; i++) {
    const std::uint64_t row = g.row(vs[i]);
    for (int j = i + 1; j < n; j++) {
      if ((row >> vs[j]) & 1u) key[bit / 64] |= std::uint64_t(1) << (bit % 64);
      bit++;
    }
  }
  return key;
}

// Backtracking minimizer for orders whose upper triangle fits in one word
// (n <= 11). Positions are filled class block by class block; placing
// position i fixes the whole column of bits towards positions j < i, so the
// key grows by one contiguous chunk per step and branches whose partial key
// already exceeds the best can be cut immediately.
struct SmallCanon {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> cls;  // candidate vertices per class
  std::vector<int> pos_class;         // class of each position
  std::vector<int> vs;                // vs[p] = vertex at position p
  std::vector<char> used;
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> best_vs;

  // Bit for the pair (j, i), j < i, packed most-significant-first so that
  // integer comparison is lexicographic comparison of the bit sequence.
  static int shift(int i, int j) { return 63 - (i * (i - 1) / 2 + j); }

  // `partial` holds columns 0..i-1.
  void dfs(int i, std::uint64_t partial) {
    if (i == n) {
      if (!have_best || partial < best) {
        best = partial;
        best_vs = vs;
        have_best = true;
      }
      return;
    }
    for (int v : cls[pos_class[i]]) {
      if (used[v]) continue;
      const std::uint64_t row = g.row(v);
      std::uint64_t next = partial;
      for (int j = 0; j < i; j++) {
        next |= ((row >> vs[j]) & 1u) << shift(i, j);
      }
      if (have_best && i > 0) {
        // prune against the current best on the prefix known so far
        const std::uint64_t prefix = ~0ull << shift(i, i - 1);
        if ((next & prefix) > (best & prefix)) continue;
      }
      used[v] = 1;
      vs[i] = v;
      dfs(i + 1, next);
      used[v] = 0;
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;

  auto part = stable_partition(g);
  int k = *std::max_element(part.begin(), part.end()) + 1;
  std::vector<std::vector<int>> cls(k);
  for (int v = 0; v < n; v++) cls[part[v]].push_back(v);
  for (auto& c : cls) std::sort(c.begin(), c.end());

  std::vector<int> best_vs;
  if (std::size_t(n) * (n - 1) / 2 <= 64) {
    SmallCanon sc{g, n, cls, {}, std::vector<int>(n), std::vector<char>(n, 0)};
    for (int c = 0; c < k; c++) {
      sc.pos_class.insert(sc.pos_class.end(), cls[c].size(), c);
    }
    sc.dfs(0, 0);
    best_vs = std::move(sc.best_vs);
  } else {
    // Large orders: iterate the product of per-class permutations. Class
    // numbering is isomorphism-invariant, so the minimum key over these
    // orderings is canonical either way.
    std::vector<int> vs;
    std::vector<std::uint64_t> best_key;
    std::vector<std::vector<int>> perm = cls;
    while (true) {
      vs.clear();
      for (const auto& c : perm) vs.insert(vs.end(), c.begin(), c.end());
      auto key = key_under(g, vs);
      if (best_vs.empty() || key < best_key) {
        best_key = std::move(key);
        best_vs = vs;
      }
      int i = k - 1;
      while (i >= 0 && !std::next_permutation(perm[i].begin(), perm[i].end())) i--;
      if (i < 0) break;
    }
  }

  // best_vs[p] is the vertex placed at position p; build the relabeling map.
  std::vector<int> relabel(n);
  for (int p = 0; p < n; p++) relabel[best_vs[p]] = p;
  return permuted(g, relabel);
}

std::vector<std::uint64_t> canonical_key(const Graph& g) {
  auto key = adjacency_key(canonical_form(g));
  key.insert(key.begin(), std::uint64_t(g.order()));
  return key;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace crlab
