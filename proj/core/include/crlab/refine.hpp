#pragma once

#include <span>
#include <vector>

#include "crlab/digest.hpp"
#include "crlab/graph.hpp"

namespace crlab {

using ColorId = Digest;

/// One refinement round: assignment of a color to each vertex.
struct Coloring {
  int round = 0;
  std::vector<ColorId> assignment;
};

/// The invariant read off after running refinement for `rounds` rounds:
/// sorted multiset of the vertex colors.
struct CrInvariant {
  int order = 0;
  int rounds = 0;
  std::vector<ColorId> colors;  // sorted

  friend auto operator<=>(const CrInvariant&, const CrInvariant&) = default;
};

enum class Mode { Digest, Exact };

/// Rounds 0..R of refinement, where R is the first round whose partition
/// equals the previous round's partition. R <= order.
std::vector<Coloring> refine_to_stable(const Graph& g);

/// Vertex colors after exactly r rounds of the neighbor-multiset update.
std::vector<ColorId> colors_at_round(const Graph& g, int r);

/// Colors read at round n (the order), so equal-order graphs are compared at
/// a common round.
CrInvariant cr_invariant(const Graph& g);

bool cr_equivalent(const Graph& g, const Graph& h, Mode mode = Mode::Digest);

/// Set-based similarity (multiplicities ignored); always computed in exact
/// joint mode.
bool cr_similar(const Graph& g, const Graph& h);

/// Digest of the multiset of neighbor degrees of x (the round-2 color).
ColorId iterated_degree(const Graph& g, int x);

/// Exact refinement on the disjoint union of a batch of graphs: small integer
/// color ids, renamed synchronously each round, comparable across the whole
/// batch. No hashing; this is the ground-truth oracle for digest mode.
struct ExactJointColoring {
  /// per_round[r][i][v] = color id of vertex v of graph i after r rounds.
  std::vector<std::vector<std::vector<int>>> per_round;
  /// First round whose joint partition equals the previous round's.
  int stable_round = 0;

  const std::vector<std::vector<int>>& stable() const { return per_round[stable_round]; }
  const std::vector<std::vector<int>>& at(int r) const { return per_round[r]; }
};

/// Runs until the joint partition stabilizes and at least min_rounds rounds
/// have been computed. Total batch order is capped at 64.
ExactJointColoring exact_joint_refine(std::span<const Graph> gs, int min_rounds = 0);
inline ExactJointColoring exact_joint_refine(const Graph& g, const Graph& h, int min_rounds = 0) {
  const Graph gs[] = {g, h};
  return exact_joint_refine(gs, min_rounds);
}

/// Stable partition of one graph as dense class ids 0..k-1, classes numbered
/// by digest order (isomorphism-invariant).
std::vector<int> stable_partition(const Graph& g);

}  // namespace crlab
