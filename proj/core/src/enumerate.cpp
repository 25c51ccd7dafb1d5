#include "crlab/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "crlab/canonical.hpp"
#include "crlab/graph6.hpp"

namespace crlab {

std::size_t expected_corpus_size(int n) {
  static const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  if (n < 0 || n > 8) throw std::invalid_argument("expected_corpus_size: n out of range");
  return counts[n];
}

namespace {

Graph mask_to_graph(int n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, bit++)
      if ((mask >> bit) & 1u) g.add_edge(i, j);
  return g;
}

using CanonMap = std::map<std::vector<std::uint64_t>, Graph>;

void finish(Corpus& c) {
  std::sort(c.graphs.begin(), c.graphs.end(),
            [](const Graph& a, const Graph& b) {
              if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
              return adjacency_key(a) < adjacency_key(b);
            });
  c.connected.resize(c.graphs.size());
  for (std::size_t i = 0; i < c.graphs.size(); i++) c.connected[i] = is_connected(c.graphs[i]);
}

Corpus enumerate_exhaustive(int n) {
  const std::uint64_t masks = std::uint64_t(1) << (n * (n - 1) / 2);
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  if (masks < 4096) jobs = 1;

  std::vector<CanonMap> partial(jobs);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; t++) {
    workers.emplace_back([&, t]() {
      for (std::uint64_t m = t; m < masks; m += jobs) {
        Graph canon = canonical_form(mask_to_graph(n, m));
        partial[t].emplace(adjacency_key(canon), canon);
      }
    });
  }
  for (auto& w : workers) w.join();

  CanonMap merged;
  for (auto& p : partial) merged.merge(p);

  Corpus c;
  c.order = n;
  c.source = "builtin";
  for (auto& [_, g] : merged) c.graphs.push_back(std::move(g));
  finish(c);
  return c;
}

// n = 8 by vertex extension: every 8-vertex graph contains an n = 7 induced
// subgraph from the seed set, so extending every seed by every neighborhood
// of the new vertex covers all classes.
Corpus enumerate_extend(const Corpus& seeds) {
  const int n = seeds.order + 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CanonMap> partial(jobs);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; t++) {
    workers.emplace_back([&, t]() {
      for (std::size_t s = t; s < seeds.graphs.size(); s += jobs) {
        const Graph& seed = seeds.graphs[s];
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t(1) << seeds.order); nbrs++) {
          Graph g(n);
          for (int u = 0; u < seeds.order; u++) {
            seed.for_neighbors(u, [&](int v) {
              if (v > u) g.add_edge(u, v);
            });
            if ((nbrs >> u) & 1u) g.add_edge(u, n - 1);
          }
          Graph canon = canonical_form(g);
          partial[t].emplace(adjacency_key(canon), canon);
        }
      }
    });
  }
  for (auto& w : workers) w.join();

  CanonMap merged;
  for (auto& p : partial) merged.merge(p);

  Corpus c;
  c.order = n;
  c.source = "builtin";
  for (auto& [_, g] : merged) c.graphs.push_back(std::move(g));
  finish(c);
  return c;
}

}  // namespace

const Corpus& enumerate_graphs(int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument(
        "enumerate_graphs: built-in enumeration covers 1 <= n <= 8; load larger "
        "corpora from graph6 files");
  }
  // recursive: building n = 8 re-enters for its n = 7 seed set
  static std::recursive_mutex mu;
  static std::map<int, Corpus> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Corpus c = n <= 7 ? enumerate_exhaustive(n) : enumerate_extend(enumerate_graphs(7));
  return cache.emplace(n, std::move(c)).first->second;
}

Corpus load_corpus_graph6(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  Corpus c;
  c.source = "external";
  std::map<std::vector<std::uint64_t>, Graph> seen;
  std::string line;
  std::size_t lineno = 0;
  int order = -1;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    Graph g;
    try {
      g = parse_graph_line(line);
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (order < 0) order = g.order();
    if (g.order() != order) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": corpus mixes orders " + std::to_string(order) +
                               " and " + std::to_string(g.order()));
    }
    Graph canon = canonical_form(g);
    seen.emplace(adjacency_key(canon), std::move(canon));
  }
  if (order < 0) throw std::runtime_error(path + ": empty corpus file");
  c.order = order;
  for (auto& [_, g] : seen) c.graphs.push_back(std::move(g));
  std::sort(c.graphs.begin(), c.graphs.end(),
            [](const Graph& a, const Graph& b) {
              if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
              return adjacency_key(a) < adjacency_key(b);
            });
  c.connected.resize(c.graphs.size());
  for (std::size_t i = 0; i < c.graphs.size(); i++) c.connected[i] = is_connected(c.graphs[i]);
  return c;
}

void save_corpus_graph6(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path);
  out << ">>crlab-corpus order=" << corpus.order << " count=" << corpus.graphs.size()
      << " gen=" << corpus.source << "\n";
  for (const auto& g : corpus.graphs) out << emit_graph6(g) << "\n";
}

}  // namespace crlab
