#include "crlab/graph6.hpp"

#include <bit>
#include <sstream>

namespace crlab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int checked_byte(std::string_view line, std::size_t i) {
  unsigned char c = line[i];
  if (c < kBias || c > kMaxByte) {
    throw ParseError("byte out of printable graph6 range 63..126", i);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 line", 0);
  int n = checked_byte(line, 0);
  if (n == 63) throw ParseError("multi-byte order header not supported (n > 62)", 0);
  Graph g(n);

  const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < 1 + nbytes) {
    throw ParseError("truncated graph6 payload", line.size());
  }
  if (line.size() > 1 + nbytes) {
    throw ParseError("trailing bytes after graph6 payload", 1 + nbytes);
  }

  std::size_t bit = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      std::size_t byte = 1 + bit / 6;
      int shift = 5 - int(bit % 6);
      if (checked_byte(line, byte) >> shift & 1) g.add_edge(i, j);
      bit++;
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (; bit < nbytes * 6; bit++) {
    std::size_t byte = 1 + bit / 6;
    int shift = 5 - int(bit % 6);
    if (checked_byte(line, byte) >> shift & 1) {
      throw ParseError("nonzero padding bit", byte);
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("emit_graph6: order > 62");
  const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, char(kBias));
  out[0] = char(kBias + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
      bit++;
    }
  }
  return out;
}

Graph parse_sparse6(std::string_view line) {
  if (line.empty() || line[0] != ':') throw ParseError("sparse6 line must start with ':'", 0);
  if (line.size() < 2) throw ParseError("truncated sparse6 header", 1);
  int n = checked_byte(line, 1);
  if (n == 63) throw ParseError("multi-byte order header not supported (n > 62)", 1);
  Graph g(n);
  if (n == 0) return g;

  int k = n <= 1 ? 1 : std::bit_width(unsigned(n - 1));
  // Bit stream over the payload bytes, 6 bits per byte, big-endian.
  std::size_t pos = 2;
  int avail = 0;
  std::uint64_t acc = 0;
  auto fill = [&](int want) {
    while (avail < want && pos < line.size()) {
      acc = (acc << 6) | std::uint64_t(checked_byte(line, pos));
      pos++;
      avail += 6;
    }
    return avail >= want;
  };

  int v = 0;
  while (fill(1 + k)) {
    int b = int(acc >> (avail - 1)) & 1;
    avail--;
    int x = int(acc >> (avail - k)) & ((1 << k) - 1);
    avail -= k;
    if (b) v++;
    if (x > v) {
      v = x;
    } else {
      if (v >= n) break;
      if (x == v) throw ParseError("sparse6 self-loop rejected", pos - 1);
      if (!g.has_edge(x, v)) g.add_edge(x, v);
    }
    if (v >= n) break;
  }
  return g;
}

Graph parse_graph_line(std::string_view line) {
  if (!line.empty() && line[0] == ':') return parse_sparse6(line);
  return parse_graph6(line);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = -1;
  if (!(in >> n) || n < 0 || n > kMaxOrder) {
    throw ParseError("edge list must start with a valid order line", 0);
  }
  Graph g{int(n)};
  long u, v;
  std::size_t edge_idx = 0;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("dangling endpoint in edge list", edge_idx);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge endpoint out of range", edge_idx);
    }
    if (u == v) throw ParseError("self-loop in edge list", edge_idx);
    if (g.has_edge(int(u), int(v))) throw ParseError("duplicate edge in edge list", edge_idx);
    g.add_edge(int(u), int(v));
    edge_idx++;
  }
  if (!in.eof()) throw ParseError("malformed token in edge list", edge_idx);
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int u = 0; u < g.order(); u++) {
    g.for_neighbors(u, [&](int v) {
      if (v > u) out << u << " " << v << "\n";
    });
  }
  return out.str();
}

std::string emit_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); v++) out << "  " << v << ";\n";
  for (int u = 0; u < g.order(); u++) {
    g.for_neighbors(u, [&](int v) {
      if (v > u) out << "  " << u << " -- " << v << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace crlab
