#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "crlab/deck.hpp"
#include "crlab/enumerate.hpp"
#include "crlab/wl2.hpp"

using namespace crlab;

namespace {
Graph two_c3() { return disjoint_union(Graph::cycle(3), Graph::cycle(3)); }
}

TEST_CASE("wl2_invariant examples") {
  CHECK(wl2_invariant(Graph::cycle(6)) != wl2_invariant(two_c3()));
  CHECK(wl2_invariant(Graph::complete(3)) != wl2_invariant(Graph::path(3)));

  std::mt19937 rng(11);
  for (const auto& g : {Graph::cycle(6), Graph::path(4), two_c3()}) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 5; rep++) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(wl2_invariant(permuted(g, perm)) == wl2_invariant(g));
    }
  }
}

TEST_CASE("wl2_equivalent examples in both modes") {
  std::mt19937 rng(12);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Mode mode : {Mode::Digest, Mode::Exact}) {
    CHECK(wl2_equivalent(Graph::cycle(6), permuted(Graph::cycle(6), perm), mode));
    CHECK(!wl2_equivalent(Graph::cycle(6), two_c3(), mode));
    CHECK(!wl2_equivalent(Graph::cycle(6), Graph::path(6), mode));
  }
}

TEST_CASE("pair partition stabilizes within n^2 rounds") {
  for (int n = 1; n <= 4; n++) {
    for (const auto& g : enumerate_graphs(n).graphs) {
      CHECK(wl2_stable_round(g) <= n * n);
    }
  }
  CHECK(wl2_stable_round(Graph::cycle(6)) <= 36);
}

TEST_CASE("wl2 equivalence implies cr, dcr, and connectedness agreement") {
  for (int n = 2; n <= 5; n++) {
    const auto& corpus = enumerate_graphs(n);
    std::vector<Wl2Invariant> wl;
    for (const auto& g : corpus.graphs) wl.push_back(wl2_invariant(g));
    for (std::size_t i = 0; i < corpus.graphs.size(); i++) {
      for (std::size_t j = i + 1; j < corpus.graphs.size(); j++) {
        if (wl[i] != wl[j]) continue;
        CHECK(cr_equivalent(corpus.graphs[i], corpus.graphs[j]));
        CHECK(dcr_equivalent(corpus.graphs[i], corpus.graphs[j]));
        CHECK(corpus.connected[i] == corpus.connected[j]);
      }
    }
  }
}

TEST_CASE("digest and exact wl2 agree on small pairs") {
  for (int n = 2; n <= 4; n++) {
    const auto& corpus = enumerate_graphs(n).graphs;
    for (std::size_t i = 0; i < corpus.size(); i++) {
      for (std::size_t j = i; j < corpus.size(); j++) {
        CHECK(wl2_equivalent(corpus[i], corpus[j], Mode::Digest) ==
              wl2_equivalent(corpus[i], corpus[j], Mode::Exact));
      }
    }
  }
}
