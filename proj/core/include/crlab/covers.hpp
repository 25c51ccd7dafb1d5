#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crlab/graph.hpp"

namespace crlab {

/// Truncated universal cover: the tree of non-backtracking walks of length
/// <= depth starting at a root vertex. Node 0 is the root (empty walk); every
/// node keeps the base-graph vertex its walk ends at.
struct UnfoldingTree {
  int depth = 0;
  std::vector<int> base_vertex;       // endpoint of each node's walk
  std::vector<int> parent;            // -1 for the root
  std::vector<std::vector<int>> children;

  std::size_t size() const { return base_vertex.size(); }
};

/// Raised when an unfolding would exceed the node guard.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int depth)
      : std::runtime_error(what), depth_(depth) {}
  int depth() const { return depth_; }

 private:
  int depth_;
};

inline constexpr std::size_t kDefaultNodeGuard = 10'000'000;

UnfoldingTree unfold(const Graph& g, int x, int depth,
                     std::size_t node_guard = kDefaultNodeGuard);

/// Canonical rooted-tree code: sorted concatenation of bracketed child codes.
/// Equal codes iff rooted-tree isomorphic.
std::string ahu_code(const UnfoldingTree& t);

/// Left: C^r colors of x and y equal under exact joint refinement of g and h.
/// Right: depth-r unfoldings rooted-isomorphic. The two coincide.
std::pair<bool, bool> check_color_cover(const Graph& g, int x, const Graph& h,
                                        int y, int depth,
                                        std::size_t node_guard = kDefaultNodeGuard);

std::string emit_dot(const UnfoldingTree& t, const std::string& name = "U");

}  // namespace crlab
