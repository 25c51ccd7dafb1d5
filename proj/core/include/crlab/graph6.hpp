#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "crlab/graph.hpp"

namespace crlab {

/// Malformed input; offset is the byte position of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// graph6, single-byte header form (n <= 62). Column-major upper triangle:
/// x(0,1), x(0,2), x(1,2), x(0,3), ... in 6-bit groups offset by 63.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// sparse6 (lines starting with ':'), accepted read-only.
Graph parse_sparse6(std::string_view line);

/// Dispatches on the leading ':' between graph6 and sparse6.
Graph parse_graph_line(std::string_view line);

/// Leading order line, then whitespace-separated "u v" pairs, one per line.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

std::string emit_dot(const Graph& g, const std::string& name = "G");

}  // namespace crlab
