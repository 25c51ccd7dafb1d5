#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "crlab/canonical.hpp"
#include "crlab/covers.hpp"
#include "crlab/enumerate.hpp"
#include "crlab/refine.hpp"

using namespace crlab;

namespace {

Graph two_c3() { return disjoint_union(Graph::cycle(3), Graph::cycle(3)); }

Graph tree_to_graph(const UnfoldingTree& t) {
  Graph g(int(t.size()));
  for (std::size_t i = 1; i < t.size(); i++) g.add_edge(t.parent[i], int(i));
  return g;
}

// Independent non-backtracking walk counter by direct recursion.
std::size_t count_nbt_walks(const Graph& g, int from, int pred, int depth) {
  std::size_t total = 1;  // the walk ending here
  if (depth == 0) return total;
  g.for_neighbors(from, [&](int u) {
    if (u != pred) total += count_nbt_walks(g, u, from, depth - 1);
  });
  return total;
}

// Brute-force rooted-tree isomorphism by backtracking child matching,
// independent of the canonical code.
bool rooted_iso(const UnfoldingTree& a, int ra, const UnfoldingTree& b, int rb) {
  const auto& ca = a.children[ra];
  const auto& cb = b.children[rb];
  if (ca.size() != cb.size()) return false;
  std::vector<int> perm(cb.begin(), cb.end());
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < ca.size() && ok; i++) {
      ok = rooted_iso(a, ca[i], b, perm[i]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("unfolding a tree past its diameter reproduces the tree") {
  for (int n = 2; n <= 6; n++) {
    const auto& corpus = enumerate_graphs(n);
    for (std::size_t i = 0; i < corpus.graphs.size(); i++) {
      const auto& g = corpus.graphs[i];
      if (!corpus.connected[i] || g.edge_count() != std::size_t(n - 1)) continue;
      for (int x = 0; x < n; x++) {
        auto t = unfold(g, x, n);
        CHECK(t.size() == std::size_t(n));
        CHECK(isomorphic(tree_to_graph(t), g));
      }
    }
  }
}

TEST_CASE("unfold examples") {
  auto t = unfold(Graph::cycle(3), 0, 2);
  CHECK(t.size() == 5);  // walks: e; xa; xb; xab; xba
  CHECK(t.children[0].size() == 2);
  // path of 5 nodes rooted at the middle
  auto mid = unfold(Graph::path(5), 2, 2);
  CHECK(ahu_code(t) == ahu_code(mid));

  auto root_only = unfold(Graph::complete(4), 1, 0);
  CHECK(root_only.size() == 1);

  CHECK_THROWS_AS(unfold(Graph::cycle(3), 3, 1), std::invalid_argument);
}

TEST_CASE("unfolding covering structure") {
  // children of the root <-> N(x); children of others <-> N(end) minus pred
  auto g = Graph::complete(4);
  auto t = unfold(g, 0, 3);
  CHECK(t.children[0].size() == 3);
  for (std::size_t i = 1; i < t.size(); i++) {
    if (t.children[i].empty()) continue;  // truncation level
    int pred = t.base_vertex[t.parent[i]];
    CHECK(int(t.children[i].size()) == g.degree(t.base_vertex[i]) - (pred >= 0 ? 1 : 0));
  }
}

TEST_CASE("node counts match direct walk enumeration") {
  for (int n = 2; n <= 5; n++) {
    for (const auto& g : enumerate_graphs(n).graphs) {
      for (int x = 0; x < n; x++) {
        for (int r = 0; r <= 5; r++) {
          CHECK(unfold(g, x, r).size() == count_nbt_walks(g, x, -1, r));
        }
      }
    }
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(unfold(Graph::complete(5), 0, 30, 1000), ResourceError);
}

TEST_CASE("ahu codes") {
  auto single = unfold(Graph::edgeless(1), 0, 4);
  CHECK(ahu_code(single) == "()");

  // two leaf children in either order
  UnfoldingTree a;
  a.base_vertex = {0, 1, 2};
  a.parent = {-1, 0, 0};
  a.children = {{1, 2}, {}, {}};
  UnfoldingTree b = a;
  b.children[0] = {2, 1};
  CHECK(ahu_code(a) == ahu_code(b));

  auto c3 = unfold(Graph::cycle(3), 0, 2);
  auto p5end = unfold(Graph::path(5), 0, 2);
  CHECK(p5end.size() == 3);
  CHECK(ahu_code(c3) != ahu_code(p5end));
  CHECK(!rooted_iso(c3, 0, p5end, 0));
}

TEST_CASE("ahu equality matches brute-force rooted isomorphism") {
  std::vector<UnfoldingTree> trees;
  for (const auto& g : enumerate_graphs(4).graphs) {
    for (int x = 0; x < 4; x++)
      for (int r = 0; r <= 3; r++) trees.push_back(unfold(g, x, r));
  }
  std::mt19937 rng(5);
  for (int rep = 0; rep < 400; rep++) {
    const auto& a = trees[rng() % trees.size()];
    const auto& b = trees[rng() % trees.size()];
    CHECK((ahu_code(a) == ahu_code(b)) == rooted_iso(a, 0, b, 0));
  }
}

TEST_CASE("check_color_cover examples") {
  auto c6 = Graph::cycle(6);
  auto t3 = two_c3();
  for (int r = 0; r <= 4; r++) {
    auto [colors, unfoldings] = check_color_cover(c6, 0, t3, 0, r);
    CHECK(colors);
    CHECK(unfoldings);
  }
  auto [c, u] = check_color_cover(Graph::path(5), 0, c6, 0, 2);
  CHECK(!c);
  CHECK(!u);
  auto [c2, u2] = check_color_cover(c6, 3, c6, 3, 5);
  CHECK(c2);
  CHECK(u2);
}

TEST_CASE("colors coincide with truncated unfoldings (small sweep)") {
  std::vector<Graph> all;
  for (int n = 1; n <= 4; n++)
    for (const auto& g : enumerate_graphs(n).graphs) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); i++) {
    for (std::size_t j = i; j < all.size(); j++) {
      for (int x = 0; x < all[i].order(); x++) {
        for (int y = 0; y < all[j].order(); y++) {
          for (int r = 0; r <= 4; r++) {
            auto [colors, unfoldings] = check_color_cover(all[i], x, all[j], y, r);
            CHECK(colors == unfoldings);
          }
        }
      }
    }
  }
}

TEST_CASE("a proper subgraph of a connected graph is never similar to it") {
  for (int n = 2; n <= 5; n++) {
    const auto& corpus = enumerate_graphs(n);
    for (std::size_t i = 0; i < corpus.graphs.size(); i++) {
      if (!corpus.connected[i]) continue;
      const auto& g = corpus.graphs[i];
      for (int v = 0; v < n; v++) {
        CHECK(!cr_similar(g, delete_vertex(g, v)));
      }
      for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
          if (g.has_edge(u, v)) CHECK(!cr_similar(g, delete_edge(g, u, v)));
        }
      }
    }
  }
}

TEST_CASE("crossed subgraph similarity is impossible (sampled)") {
  std::mt19937 rng(31);
  std::vector<Graph> connected;
  for (int n = 3; n <= 6; n++) {
    const auto& corpus = enumerate_graphs(n);
    for (std::size_t i = 0; i < corpus.graphs.size(); i++)
      if (corpus.connected[i]) connected.push_back(corpus.graphs[i]);
  }
  auto random_proper_subgraph = [&](const Graph& g) {
    if (rng() % 2 == 0 && g.order() > 1) return delete_vertex(g, int(rng() % g.order()));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); u++)
      g.for_neighbors(u, [&](int v) { if (v > u) edges.emplace_back(u, v); });
    if (edges.empty()) return delete_vertex(g, int(rng() % g.order()));
    auto [u, v] = edges[rng() % edges.size()];
    return delete_edge(g, u, v);
  };
  for (int rep = 0; rep < 500; rep++) {
    const auto& a = connected[rng() % connected.size()];
    const auto& b = connected[rng() % connected.size()];
    auto a1 = random_proper_subgraph(a);
    auto b1 = random_proper_subgraph(b);
    CHECK(!(cr_similar(a, b1) && cr_similar(b, a1)));
  }
}

TEST_CASE("similarity of connected graphs: set intersection and unfolding codes") {
  std::vector<Graph> connected;
  for (int n = 2; n <= 5; n++) {
    const auto& corpus = enumerate_graphs(n);
    for (std::size_t i = 0; i < corpus.graphs.size(); i++)
      if (corpus.connected[i]) connected.push_back(corpus.graphs[i]);
  }
  auto code_set = [](const Graph& g, int r) {
    std::set<std::string> s;
    for (int x = 0; x < g.order(); x++) s.insert(ahu_code(unfold(g, x, r)));
    return s;
  };
  for (std::size_t i = 0; i < connected.size(); i++) {
    for (std::size_t j = i; j < connected.size(); j++) {
      const auto& g = connected[i];
      const auto& h = connected[j];
      auto jc = exact_joint_refine(g, h);
      const auto& s = jc.stable();
      std::set<int> sg(s[0].begin(), s[0].end());
      std::set<int> sh(s[1].begin(), s[1].end());
      std::vector<int> inter;
      std::set_intersection(sg.begin(), sg.end(), sh.begin(), sh.end(),
                            std::back_inserter(inter));
      bool sim = cr_similar(g, h);
      CHECK(sim == !inter.empty());
      if (sim) {
        for (int r = 0; r <= 4; r++) CHECK(code_set(g, r) == code_set(h, r));
      }
    }
  }
}

TEST_CASE("similarity with a disconnected graph extends to its components") {
  std::mt19937 rng(41);
  std::vector<Graph> connected;
  for (int n = 2; n <= 5; n++) {
    const auto& corpus = enumerate_graphs(n);
    for (std::size_t i = 0; i < corpus.graphs.size(); i++)
      if (corpus.connected[i]) connected.push_back(corpus.graphs[i]);
  }
  std::size_t antecedents = 0;
  for (int rep = 0; rep < 500; rep++) {
    const auto& g = connected[rng() % connected.size()];
    const auto& h1 = rep % 2 ? g : connected[rng() % connected.size()];
    const auto& h2 = connected[rng() % connected.size()];
    auto h = disjoint_union(h1, h2);
    if (!cr_similar(g, h)) continue;
    antecedents++;
    CHECK(cr_similar(g, h1));
    CHECK(cr_similar(g, h2));
  }
  CHECK(antecedents > 0);
}

TEST_CASE("dot emission of unfoldings") {
  auto dot = emit_dot(unfold(Graph::path(3), 1, 1));
  CHECK(dot.find("n0 -- n1") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
}
