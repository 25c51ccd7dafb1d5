#pragma once

#include <string>
#include <vector>

#include "crlab/graph.hpp"

namespace crlab {

/// Complete set of pairwise non-isomorphic graphs of one order, each stored
/// in canonical form.
struct Corpus {
  int order = 0;
  std::vector<Graph> graphs;
  std::vector<bool> connected;
  std::string source;  // "builtin" or "external"
};

/// Built-in exhaustive enumeration, memoized per process. n <= 7 iterates all
/// upper-triangle bitmasks with canonical dedup; n = 8 extends the n = 7 seed
/// set by one vertex. Larger corpora must be loaded from graph6 files.
const Corpus& enumerate_graphs(int n);

/// Known counts 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 1..8, frozen from
/// the brute-force dedup oracle in the test suite.
std::size_t expected_corpus_size(int n);

/// Reads newline-delimited graph6/sparse6, skipping ">>" header lines.
/// All lines must share one order; duplicates are dropped.
Corpus load_corpus_graph6(const std::string& path);

/// Writes a corpus cache file: one header line, then one graph6 line per graph.
void save_corpus_graph6(const Corpus& corpus, const std::string& path);

}  // namespace crlab
