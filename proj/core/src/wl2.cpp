#include "crlab/wl2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace crlab {

namespace {

constexpr std::uint32_t kTagAtomic = 10;
constexpr std::uint32_t kTagPair = 11;
constexpr std::uint32_t kTagUpdate = 12;

// Atomic pair type: 0 diagonal, 1 adjacent, 2 non-adjacent.
int atomic_type(const Graph& g, int u, int v) {
  if (u == v) return 0;
  return g.has_edge(u, v) ? 1 : 2;
}

std::vector<ColorId> initial_pair_colors(const Graph& g) {
  const int n = g.order();
  std::vector<ColorId> c(std::size_t(n) * n);
  for (int u = 0; u < n; u++)
    for (int v = 0; v < n; v++)
      c[std::size_t(u) * n + v] = digest_ints(kTagAtomic, {atomic_type(g, u, v)});
  return c;
}

// New color of (u,v): own color plus the sorted multiset over w of the
// ordered pair (color(u,w), color(w,v)).
std::vector<ColorId> next_pair_round(const Graph& g, const std::vector<ColorId>& prev) {
  const int n = g.order();
  std::vector<ColorId> next(prev.size());
  std::vector<ColorId> wpairs(n);
  for (int u = 0; u < n; u++) {
    for (int v = 0; v < n; v++) {
      for (int w = 0; w < n; w++) {
        wpairs[w] = digest_list(kTagPair, {prev[std::size_t(u) * n + w],
                                           prev[std::size_t(w) * n + v]});
      }
      std::sort(wpairs.begin(), wpairs.end());
      std::vector<ColorId> key;
      key.reserve(n + 1);
      key.push_back(prev[std::size_t(u) * n + v]);
      key.insert(key.end(), wpairs.begin(), wpairs.end());
      next[std::size_t(u) * n + v] = digest_list(kTagUpdate, key);
    }
  }
  return next;
}

}  // namespace

Wl2Invariant wl2_invariant(const Graph& g) {
  const int n = g.order();
  auto cur = initial_pair_colors(g);
  for (int r = 0; r < n * n; r++) cur = next_pair_round(g, cur);
  std::sort(cur.begin(), cur.end());
  return Wl2Invariant{n, std::move(cur)};
}

int wl2_stable_round(const Graph& g) {
  auto cur = initial_pair_colors(g);
  auto classes = [](const std::vector<ColorId>& c) {
    return std::unordered_set<Digest>(c.begin(), c.end()).size();
  };
  std::size_t prev_classes = classes(cur);
  for (int r = 1;; r++) {
    cur = next_pair_round(g, cur);
    std::size_t k = classes(cur);
    if (k == prev_classes) return r;
    prev_classes = k;
  }
}

namespace {

// Exact joint 2-WL on two graphs: small integer pair colors, renamed
// synchronously each round. Compares multisets at joint stabilization.
bool exact_wl2_equal(const Graph& g, const Graph& h) {
  const Graph* gs[2] = {&g, &h};
  std::vector<std::vector<int>> cur(2);
  {
    std::map<int, int> intern;
    for (int i = 0; i < 2; i++) {
      const int n = gs[i]->order();
      cur[i].resize(std::size_t(n) * n);
      for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++) {
          int t = atomic_type(*gs[i], u, v);
          auto [it, _] = intern.emplace(t, int(intern.size()));
          cur[i][std::size_t(u) * n + v] = it->second;
        }
    }
  }

  auto distinct = [&]() {
    std::set<int> s;
    for (auto& side : cur)
      s.insert(side.begin(), side.end());
    return s.size();
  };

  std::size_t prev = distinct();
  while (true) {
    std::map<std::vector<int>, int> intern;
    std::vector<std::vector<int>> next(2);
    for (int i = 0; i < 2; i++) {
      const int n = gs[i]->order();
      next[i].resize(cur[i].size());
      std::vector<int> wpairs;
      for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++) {
          wpairs.clear();
          for (int w = 0; w < n; w++) {
            wpairs.push_back(cur[i][std::size_t(u) * n + w]);
            wpairs.push_back(cur[i][std::size_t(w) * n + v]);
          }
          // sort pairs of ints as (a,b) units
          std::vector<std::pair<int, int>> ps(n);
          for (int w = 0; w < n; w++) ps[w] = {wpairs[2 * w], wpairs[2 * w + 1]};
          std::sort(ps.begin(), ps.end());
          std::vector<int> key;
          key.reserve(2 * n + 1);
          key.push_back(cur[i][std::size_t(u) * n + v]);
          for (auto [a, b] : ps) {
            key.push_back(a);
            key.push_back(b);
          }
          auto [it, _] = intern.emplace(key, int(intern.size()));
          next[i][std::size_t(u) * n + v] = it->second;
        }
    }
    cur = std::move(next);
    std::size_t k = distinct();
    if (k == prev) break;
    prev = k;
  }

  std::multiset<int> a(cur[0].begin(), cur[0].end());
  std::multiset<int> b(cur[1].begin(), cur[1].end());
  return a == b;
}

}  // namespace

bool wl2_equivalent(const Graph& g, const Graph& h, Mode mode) {
  if (g.order() != h.order()) return false;
  if (mode == Mode::Digest) return wl2_invariant(g) == wl2_invariant(h);
  return exact_wl2_equal(g, h);
}

}  // namespace crlab
