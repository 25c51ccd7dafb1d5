#include "crlab/refine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace crlab {

namespace {

// Digest tags keep the different color constructors from colliding.
constexpr std::uint32_t kTagInitial = 0;
constexpr std::uint32_t kTagRound = 1;
constexpr std::uint32_t kTagDegrees = 2;

ColorId initial_color() {
  return digest_ints(kTagInitial, {});
}

std::vector<ColorId> next_round(const Graph& g, const std::vector<ColorId>& prev) {
  std::vector<ColorId> next(g.order());
  std::vector<ColorId> nbr;
  for (int v = 0; v < g.order(); v++) {
    nbr.clear();
    g.for_neighbors(v, [&](int u) { nbr.push_back(prev[u]); });
    std::sort(nbr.begin(), nbr.end());
    next[v] = digest_list(kTagRound, nbr);
  }
  return next;
}

std::size_t class_count(const std::vector<ColorId>& colors) {
  std::unordered_set<Digest> s(colors.begin(), colors.end());
  return s.size();
}

}  // namespace

std::vector<Coloring> refine_to_stable(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("refine_to_stable: empty graph");
  std::vector<Coloring> rounds;
  rounds.push_back({0, std::vector<ColorId>(g.order(), initial_color())});
  while (true) {
    auto next = next_round(g, rounds.back().assignment);
    // Each round refines the previous partition, so equal class counts mean
    // the partition is unchanged.
    bool stable = class_count(next) == class_count(rounds.back().assignment);
    rounds.push_back({int(rounds.size()), std::move(next)});
    if (stable) break;
  }
  return rounds;
}

std::vector<ColorId> colors_at_round(const Graph& g, int r) {
  std::vector<ColorId> cur(g.order(), initial_color());
  for (int i = 0; i < r; i++) cur = next_round(g, cur);
  return cur;
}

CrInvariant cr_invariant(const Graph& g) {
  CrInvariant inv;
  inv.order = g.order();
  inv.rounds = g.order();
  inv.colors = colors_at_round(g, g.order());
  std::sort(inv.colors.begin(), inv.colors.end());
  return inv;
}

ColorId iterated_degree(const Graph& g, int x) {
  std::vector<std::int64_t> degs;
  g.for_neighbors(x, [&](int u) { degs.push_back(g.degree(u)); });
  std::sort(degs.begin(), degs.end());
  return digest_ints(kTagDegrees, degs);
}

ExactJointColoring exact_joint_refine(std::span<const Graph> gs, int min_rounds) {
  int total = 0;
  for (const auto& g : gs) total += g.order();
  if (total > kMaxOrder) {
    throw std::invalid_argument("exact_joint_refine: batch order exceeds 64");
  }

  ExactJointColoring out;
  std::vector<std::vector<int>> cur(gs.size());
  for (std::size_t i = 0; i < gs.size(); i++) cur[i].assign(gs[i].order(), 0);
  out.per_round.push_back(cur);

  int distinct = total > 0 ? 1 : 0;
  int stable = -1;
  for (int r = 0; stable < 0 || r < min_rounds; r++) {
    std::map<std::vector<int>, int> intern;
    std::vector<std::vector<int>> next(gs.size());
    std::vector<int> key;
    for (std::size_t i = 0; i < gs.size(); i++) {
      next[i].resize(gs[i].order());
      for (int v = 0; v < gs[i].order(); v++) {
        key.clear();
        gs[i].for_neighbors(v, [&](int u) { key.push_back(cur[i][u]); });
        std::sort(key.begin(), key.end());
        auto [it, _] = intern.emplace(key, int(intern.size()));
        next[i][v] = it->second;
      }
    }
    int next_distinct = int(intern.size());
    if (stable < 0 && next_distinct == distinct) stable = r;
    distinct = next_distinct;
    cur = next;
    out.per_round.push_back(std::move(next));
  }
  out.stable_round = stable;
  return out;
}

namespace {

std::vector<std::multiset<int>> side_multisets(const ExactJointColoring& jc, int round) {
  std::vector<std::multiset<int>> out;
  for (const auto& side : jc.at(round)) out.emplace_back(side.begin(), side.end());
  return out;
}

}  // namespace

bool cr_equivalent(const Graph& g, const Graph& h, Mode mode) {
  if (g.order() != h.order()) return false;
  if (mode == Mode::Digest) return cr_invariant(g) == cr_invariant(h);
  auto jc = exact_joint_refine(g, h);
  auto sides = side_multisets(jc, jc.stable_round);
  return sides[0] == sides[1];
}

bool cr_similar(const Graph& g, const Graph& h) {
  auto jc = exact_joint_refine(g, h);
  const auto& stable = jc.stable();
  std::unordered_set<int> a(stable[0].begin(), stable[0].end());
  std::unordered_set<int> b(stable[1].begin(), stable[1].end());
  return a == b;
}

std::vector<int> stable_partition(const Graph& g) {
  auto rounds = refine_to_stable(g);
  const auto& colors = rounds.back().assignment;
  std::map<Digest, int> order;
  for (const auto& c : colors) order.emplace(c, 0);
  int k = 0;
  for (auto& [_, id] : order) id = k++;
  std::vector<int> part(g.order());
  for (int v = 0; v < g.order(); v++) part[v] = order.at(colors[v]);
  return part;
}

}  // namespace crlab
