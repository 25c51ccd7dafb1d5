#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "crlab/canonical.hpp"
#include "crlab/enumerate.hpp"
#include "crlab/graph6.hpp"

using namespace crlab;

namespace {

// Independent class counter: minimize each labeled adjacency mask over all
// vertex permutations and count distinct minima. No refinement involved.
std::size_t brute_force_class_count(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slot;  // bit index -> (i, j)
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  int b = 0;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, b++) {
      idx[i][j] = idx[j][i] = b;
      slot.emplace_back(i, j);
    }

  std::set<std::uint64_t> minima;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); mask++) {
    std::uint64_t best = mask;
    for (const auto& pp : perms) {
      std::uint64_t m = 0;
      for (int s = 0; s < bits; s++) {
        if ((mask >> s) & 1u) m |= std::uint64_t(1) << idx[pp[slot[s].first]][pp[slot[s].second]];
      }
      if (m < best) best = m;
    }
    minima.insert(best);
  }
  return minima.size();
}

}  // namespace

TEST_CASE("corpus sizes match the brute-force oracle") {
  CHECK(enumerate_graphs(1).graphs.size() == 1);
  for (int n = 2; n <= 6; n++) {
    CHECK(enumerate_graphs(n).graphs.size() == brute_force_class_count(n));
  }
  // frozen oracle values
  CHECK(enumerate_graphs(2).graphs.size() == 2);
  CHECK(enumerate_graphs(3).graphs.size() == 4);
  CHECK(enumerate_graphs(4).graphs.size() == 11);
  CHECK(enumerate_graphs(5).graphs.size() == 34);
  CHECK(enumerate_graphs(6).graphs.size() == 156);
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
}

TEST_CASE("corpus members are pairwise non-isomorphic") {
  std::mt19937 rng(61);
  for (int n = 5; n <= 6; n++) {
    const auto& corpus = enumerate_graphs(n).graphs;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 1000; rep++) {
      std::size_t i = rng() % corpus.size();
      std::size_t j = rng() % corpus.size();
      if (i == j) continue;
      // full permutation search finds no isomorphism
      std::sort(perm.begin(), perm.end());
      bool found = false;
      do {
        if (permuted(corpus[i], perm) == corpus[j]) { found = true; break; }
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(!found);
    }
  }
}

TEST_CASE("complement closure permutes the corpus") {
  for (int n = 2; n <= 6; n++) {
    const auto& corpus = enumerate_graphs(n).graphs;
    std::set<std::vector<std::uint64_t>> keys;
    for (const auto& g : corpus) keys.insert(canonical_key(g));
    for (const auto& g : corpus) {
      CHECK(keys.count(canonical_key(complement(g))) == 1);
    }
  }
}

TEST_CASE("connectedness flags") {
  const auto& c4 = enumerate_graphs(4);
  std::size_t connected = 0;
  for (bool f : c4.connected) connected += f;
  CHECK(connected == 6);  // connected graphs on 4 vertices
}

TEST_CASE("corpus file round trip") {
  namespace fs = std::filesystem;
  auto path = (fs::temp_directory_path() / "crlab_corpus_test.g6").string();
  save_corpus_graph6(enumerate_graphs(4), path);
  auto loaded = load_corpus_graph6(path);
  CHECK(loaded.order == 4);
  CHECK(loaded.graphs.size() == 11);
  CHECK(loaded.source == "external");
  std::remove(path.c_str());
}

TEST_CASE("corpus loading edge cases") {
  namespace fs = std::filesystem;
  auto path = (fs::temp_directory_path() / "crlab_corpus_edge.g6").string();
  {
    std::ofstream out(path);
    out << "A_\nA?\nA_\n";  // duplicate line
  }
  auto c = load_corpus_graph6(path);
  CHECK(c.order == 2);
  CHECK(c.graphs.size() == 2);

  {
    std::ofstream out(path);
    out << "A_\n@\n";  // mixed orders
  }
  CHECK_THROWS(load_corpus_graph6(path));

  {
    std::ofstream out(path);
    out << ">>header only\n";
  }
  CHECK_THROWS(load_corpus_graph6(path));
  std::remove(path.c_str());
}
