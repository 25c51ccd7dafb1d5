#include "crlab/covers.hpp"

#include <algorithm>
#include <sstream>

#include "crlab/refine.hpp"

namespace crlab {

UnfoldingTree unfold(const Graph& g, int x, int depth, std::size_t node_guard) {
  if (x < 0 || x >= g.order()) throw std::invalid_argument("unfold: root out of range");
  if (depth < 0) throw std::invalid_argument("unfold: negative depth");

  UnfoldingTree t;
  t.depth = depth;
  t.base_vertex.push_back(x);
  t.parent.push_back(-1);
  t.children.emplace_back();

  // BFS by levels; a child extends the walk to any neighbor of the endpoint
  // except the predecessor vertex.
  std::vector<std::size_t> level{0};
  for (int d = 0; d < depth && !level.empty(); d++) {
    std::vector<std::size_t> next_level;
    for (std::size_t node : level) {
      int v = t.base_vertex[node];
      int pred = t.parent[node] < 0 ? -1 : t.base_vertex[t.parent[node]];
      g.for_neighbors(v, [&](int u) {
        if (u == pred) return;
        if (t.size() >= node_guard) {
          throw ResourceError("unfold: node guard exceeded at depth " +
                              std::to_string(d + 1), d + 1);
        }
        std::size_t id = t.size();
        t.base_vertex.push_back(u);
        t.parent.push_back(int(node));
        t.children.emplace_back();
        t.children[node].push_back(int(id));
        next_level.push_back(id);
      });
    }
    level = std::move(next_level);
  }
  return t;
}

namespace {

std::string ahu_rec(const UnfoldingTree& t, int node) {
  std::vector<std::string> kids;
  for (int c : t.children[node]) kids.push_back(ahu_rec(t, c));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

std::string ahu_code(const UnfoldingTree& t) {
  return ahu_rec(t, 0);
}

std::pair<bool, bool> check_color_cover(const Graph& g, int x, const Graph& h,
                                        int y, int depth, std::size_t node_guard) {
  auto jc = exact_joint_refine(g, h, depth);
  bool colors_equal = jc.at(depth)[0][x] == jc.at(depth)[1][y];
  bool unfoldings_equal =
      ahu_code(unfold(g, x, depth, node_guard)) == ahu_code(unfold(h, y, depth, node_guard));
  return {colors_equal, unfoldings_equal};
}

std::string emit_dot(const UnfoldingTree& t, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t i = 0; i < t.size(); i++) {
    out << "  n" << i << " [label=\"" << t.base_vertex[i] << "\"];\n";
  }
  for (std::size_t i = 1; i < t.size(); i++) {
    out << "  n" << t.parent[i] << " -- n" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace crlab
