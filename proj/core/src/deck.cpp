#include "crlab/deck.hpp"

#include <algorithm>

#include "crlab/enumerate.hpp"
#include "crlab/graph6.hpp"

namespace crlab {

std::vector<Graph> deck(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("deck: empty graph has no cards");
  std::vector<Graph> cards;
  cards.reserve(g.order());
  for (int v = 0; v < g.order(); v++) cards.push_back(delete_vertex(g, v));
  return cards;
}

DeckInvariant dcr_invariant(const Graph& g) {
  DeckInvariant d;
  d.card_order = g.order() - 1;
  for (const auto& card : deck(g)) d.cards.push_back(cr_invariant(card));
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

bool dcr_equivalent(const Graph& g, const Graph& h, Mode mode) {
  if (g.order() != h.order()) return false;
  if (mode == Mode::Digest) return dcr_invariant(g) == dcr_invariant(h);
  return dcr_equivalent_exact(g, h);
}

bool dcr_equivalent_exact(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  auto cg = deck(g);
  auto ch = deck(h);
  // Exact pairwise card comparison stays inside the 64-vertex joint batch cap;
  // group all 2n cards into CR-equivalence classes and compare side counts.
  std::vector<const Graph*> cards;
  std::vector<int> side;
  for (const auto& c : cg) { cards.push_back(&c); side.push_back(0); }
  for (const auto& c : ch) { cards.push_back(&c); side.push_back(1); }

  std::vector<int> cls(cards.size(), -1);
  int next_cls = 0;
  for (std::size_t i = 0; i < cards.size(); i++) {
    if (cls[i] >= 0) continue;
    cls[i] = next_cls++;
    for (std::size_t j = i + 1; j < cards.size(); j++) {
      if (cls[j] >= 0) continue;
      if (cr_equivalent(*cards[i], *cards[j], Mode::Exact)) cls[j] = cls[i];
    }
  }
  std::vector<std::pair<int, int>> counts(next_cls, {0, 0});
  for (std::size_t i = 0; i < cards.size(); i++) {
    if (side[i] == 0) counts[cls[i]].first++;
    else counts[cls[i]].second++;
  }
  return std::all_of(counts.begin(), counts.end(),
                     [](auto& c) { return c.first == c.second; });
}

NashWilliamsReport nash_williams_check(const Graph& g, const Graph& h) {
  if (!dcr_equivalent(g, h)) {
    throw std::domain_error("nash_williams_check: graphs are not deck-equivalent");
  }
  auto cg = deck(g);
  auto ch = deck(h);
  std::vector<CrInvariant> ig, ih;
  for (const auto& c : cg) ig.push_back(cr_invariant(c));
  for (const auto& c : ch) ih.push_back(cr_invariant(c));

  NashWilliamsReport report;
  for (int u = 0; u < g.order(); u++) {
    for (int v = 0; v < h.order(); v++) {
      if (ig[u] != ih[v]) continue;
      report.pairs_checked++;
      if (iterated_degree(g, u) != iterated_degree(h, v)) {
        report.violations.emplace_back(u, v);
      }
    }
  }
  return report;
}

Connectedness connectedness_from_deck(const DeckInvariant& d, const Corpus& corpus) {
  if (corpus.order != d.card_order + 1) {
    throw std::invalid_argument("connectedness_from_deck: corpus order mismatch");
  }
  bool any = false, any_connected = false, any_disconnected = false;
  std::string witness_conn, witness_disc;
  for (std::size_t i = 0; i < corpus.graphs.size(); i++) {
    if (dcr_invariant(corpus.graphs[i]) != d) continue;
    any = true;
    if (corpus.connected[i]) {
      any_connected = true;
      witness_conn = emit_graph6(corpus.graphs[i]);
    } else {
      any_disconnected = true;
      witness_disc = emit_graph6(corpus.graphs[i]);
    }
  }
  if (!any) return Connectedness::Unknown;
  if (any_connected && any_disconnected) {
    throw IntegrityError(
        "deck matches both a connected and a disconnected graph (" + witness_conn +
        " vs " + witness_disc + "); this should be impossible");
  }
  return any_connected ? Connectedness::Connected : Connectedness::Disconnected;
}

int connected_card_count(const Graph& g) {
  if (g.order() < 3) {
    throw std::domain_error("connected_card_count: needs order >= 3");
  }
  int count = 0;
  for (const auto& card : deck(g))
    if (is_connected(card)) count++;
  return count;
}

}  // namespace crlab
