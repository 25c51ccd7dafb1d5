#pragma once

#include <vector>

#include "crlab/digest.hpp"
#include "crlab/graph.hpp"
#include "crlab/refine.hpp"

namespace crlab {

/// Two-dimensional Weisfeiler-Leman invariant: colors of all ordered vertex
/// pairs (diagonal included), read at round n^2 so equal-order graphs are
/// compared at a common round.
struct Wl2Invariant {
  int order = 0;
  std::vector<ColorId> colors;  // sorted, n^2 entries

  friend auto operator<=>(const Wl2Invariant&, const Wl2Invariant&) = default;
};

Wl2Invariant wl2_invariant(const Graph& g);

bool wl2_equivalent(const Graph& g, const Graph& h, Mode mode = Mode::Digest);

/// Number of rounds until the pair partition stabilizes.
int wl2_stable_round(const Graph& g);

}  // namespace crlab
