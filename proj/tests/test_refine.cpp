#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "crlab/enumerate.hpp"
#include "crlab/graph.hpp"
#include "crlab/refine.hpp"

using namespace crlab;

namespace {

Graph two_c3() { return disjoint_union(Graph::cycle(3), Graph::cycle(3)); }

// Partition induced by a coloring, as sorted class-member lists.
template <typename C>
std::set<std::vector<int>> partition_of(const std::vector<C>& colors) {
  std::map<C, std::vector<int>> classes;
  for (int v = 0; v < int(colors.size()); v++) classes[colors[v]].push_back(v);
  std::set<std::vector<int>> out;
  for (auto& [_, members] : classes) out.insert(members);
  return out;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("round-1 color classes are degree classes") {
  for (int n = 1; n <= 5; n++) {
    for (const auto& g : enumerate_graphs(n).graphs) {
      auto colors = colors_at_round(g, 1);
      std::vector<int> degs(n);
      for (int v = 0; v < n; v++) degs[v] = g.degree(v);
      CHECK(partition_of(colors) == partition_of(degs));
    }
  }
}

TEST_CASE("refine_to_stable examples") {
  auto k4 = refine_to_stable(Graph::complete(4));
  CHECK(k4.back().round == 1);  // stable at round 1, one class
  CHECK(partition_of(k4.back().assignment).size() == 1);

  auto p3 = refine_to_stable(Graph::path(3));
  auto classes = partition_of(p3.back().assignment);
  CHECK(classes == std::set<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("partition refinement is monotone and stabilizes within n rounds") {
  for (int n = 1; n <= 6; n++) {
    for (const auto& g : enumerate_graphs(n).graphs) {
      auto rounds = refine_to_stable(g);
      std::size_t prev = 0;
      for (const auto& c : rounds) {
        auto k = partition_of(c.assignment).size();
        CHECK(k >= prev);
        prev = k;
      }
      int stable = rounds.back().round;  // first round equal to its predecessor
      CHECK(stable <= n);
    }
  }
}

TEST_CASE("cr_invariant examples") {
  CHECK(cr_invariant(Graph::cycle(6)) == cr_invariant(two_c3()));
  CHECK(cr_invariant(Graph::complete(3)) != cr_invariant(Graph::path(3)));

  std::mt19937 rng(99);
  for (const auto& g : {Graph::cycle(6), Graph::path(5), two_c3()}) {
    for (int rep = 0; rep < 20; rep++) {
      CHECK(cr_invariant(permuted(g, random_perm(g.order(), rng))) == cr_invariant(g));
    }
  }
}

TEST_CASE("cr_equivalent examples in both modes") {
  for (Mode mode : {Mode::Digest, Mode::Exact}) {
    CHECK(cr_equivalent(Graph::cycle(6), two_c3(), mode));
    CHECK(!cr_equivalent(Graph::cycle(6), Graph::path(6), mode));
    std::mt19937 rng(3);
    auto relabeled = permuted(Graph::cycle(6), random_perm(6, rng));
    CHECK(cr_equivalent(Graph::cycle(6), relabeled, mode));
  }
}

TEST_CASE("cr_similar examples") {
  CHECK(cr_similar(Graph::cycle(3), Graph::cycle(4)));
  CHECK(!cr_similar(Graph::path(5), Graph::cycle(6)));
  for (const auto& g : enumerate_graphs(4).graphs) CHECK(cr_similar(g, g));
}

TEST_CASE("iterated_degree") {
  auto c6 = Graph::cycle(6);
  for (int v = 1; v < 6; v++) CHECK(iterated_degree(c6, v) == iterated_degree(c6, 0));

  auto p4 = Graph::path(4);
  CHECK(iterated_degree(p4, 0) == iterated_degree(p4, 3));  // endpoints {2}
  CHECK(iterated_degree(p4, 1) == iterated_degree(p4, 2));  // inner {1,2}
  CHECK(iterated_degree(p4, 0) != iterated_degree(p4, 1));

  // empty multiset: K1's vertex matches an isolated vertex elsewhere
  CHECK(iterated_degree(Graph::edgeless(1), 0) == iterated_degree(Graph::edgeless(3), 2));
  CHECK_THROWS_AS(iterated_degree(p4, 4), std::invalid_argument);
}

TEST_CASE("exact_joint_refine examples") {
  {
    auto jc = exact_joint_refine(Graph::cycle(6), two_c3());
    auto& s = jc.stable();
    std::multiset<int> a(s[0].begin(), s[0].end()), b(s[1].begin(), s[1].end());
    CHECK(a == b);
  }
  {
    auto jc = exact_joint_refine(Graph::cycle(3), Graph::cycle(4));
    auto& s = jc.stable();
    std::set<int> all(s[0].begin(), s[0].end());
    all.insert(s[1].begin(), s[1].end());
    CHECK(all.size() == 1);  // joint refinement never splits 2-regular vertices
  }
  {
    auto jc = exact_joint_refine(Graph::complete(2), Graph::complete(2));
    CHECK(jc.stable()[0] == jc.stable()[1]);
  }
  std::vector<Graph> over(5, Graph::complete(16));
  CHECK_THROWS_AS(exact_joint_refine(over), std::invalid_argument);
}

TEST_CASE("digest mode agrees with exact joint mode on small pairs") {
  for (int n = 2; n <= 5; n++) {
    const auto& corpus = enumerate_graphs(n).graphs;
    for (std::size_t i = 0; i < corpus.size(); i++) {
      for (std::size_t j = i; j < corpus.size(); j++) {
        CHECK(cr_equivalent(corpus[i], corpus[j], Mode::Digest) ==
              cr_equivalent(corpus[i], corpus[j], Mode::Exact));
      }
    }
  }
}

TEST_CASE("cr equivalence implies degree multiset and edge count equality") {
  for (int n = 2; n <= 6; n++) {
    const auto& corpus = enumerate_graphs(n).graphs;
    std::vector<CrInvariant> inv;
    for (const auto& g : corpus) inv.push_back(cr_invariant(g));
    for (std::size_t i = 0; i < corpus.size(); i++) {
      for (std::size_t j = i + 1; j < corpus.size(); j++) {
        if (inv[i] != inv[j]) continue;
        auto dm = [](const Graph& g) {
          std::vector<int> d;
          for (int v = 0; v < g.order(); v++) d.push_back(g.degree(v));
          std::sort(d.begin(), d.end());
          return d;
        };
        CHECK(corpus[i].edge_count() == corpus[j].edge_count());
        CHECK(dm(corpus[i]) == dm(corpus[j]));
        // equal order by construction; similarity follows from equivalence
        CHECK(cr_similar(corpus[i], corpus[j]));
      }
    }
  }
}
