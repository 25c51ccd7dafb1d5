#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "crlab/graph.hpp"
#include "crlab/refine.hpp"

namespace crlab {

struct Corpus;  // enumerate.hpp

/// Multiset of cr invariants over all vertex-deleted subgraphs.
struct DeckInvariant {
  int card_order = 0;
  std::vector<CrInvariant> cards;  // sorted

  friend auto operator<=>(const DeckInvariant&, const DeckInvariant&) = default;
};

/// Cards in vertex order: card i = delete_vertex(g, i).
std::vector<Graph> deck(const Graph& g);

DeckInvariant dcr_invariant(const Graph& g);

bool dcr_equivalent(const Graph& g, const Graph& h, Mode mode = Mode::Digest);

/// Exact-mode deck comparison: joint refinement over all 2n cards.
bool dcr_equivalent_exact(const Graph& g, const Graph& h);

struct NashWilliamsReport {
  std::size_t pairs_checked = 0;
  /// (u, v) pairs whose cards are CR-equal but whose iterated degrees differ.
  std::vector<std::pair<int, int>> violations;
};

/// For every (u, v) with cr_invariant(g\u) = cr_invariant(h\v), checks that
/// the iterated degrees of u and v agree. Requires dcr-equivalent inputs.
NashWilliamsReport nash_williams_check(const Graph& g, const Graph& h);

enum class Connectedness { Connected, Disconnected, Unknown };

/// All corpus matches for a deck must agree on connectedness; disagreement
/// would falsify the implementation and aborts via IntegrityError.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Connectedness connectedness_from_deck(const DeckInvariant& d, const Corpus& corpus);

/// Number of connected cards (actual graphs, not invariants). Requires
/// order >= 3; both cards of 2K1 are connected, so the bound fails below that.
int connected_card_count(const Graph& g);

}  // namespace crlab
