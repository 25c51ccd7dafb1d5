#pragma once

#include <cstdint>
#include <vector>

#include "crlab/graph.hpp"

namespace crlab {

/// Upper-triangle adjacency bits (row-major, i < j) packed into 64-bit words.
std::vector<std::uint64_t> adjacency_key(const Graph& g);

/// Canonical relabeling: minimizes the adjacency key over all permutations
/// that respect the stable refinement partition. Two graphs have equal
/// canonical forms iff they are isomorphic.
Graph canonical_form(const Graph& g);

/// Canonical key: adjacency_key of the canonical form, prefixed by the order.
std::vector<std::uint64_t> canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace crlab
