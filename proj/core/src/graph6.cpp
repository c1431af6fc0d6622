#include "edskit/graph6.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace edskit {
namespace {

// Short-form layout: byte 0 holds n + 63; the upper adjacency triangle
// follows in column-major pair order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per byte, most significant bit first, zero-padded, every byte offset
// by 63.
constexpr int kOffset = 63;
constexpr int kMaxGraph6 = 62;

int pair_bit_count(int n) { return n * (n - 1) / 2; }

int payload_bytes(int n) { return (pair_bit_count(n) + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty())
    throw std::invalid_argument("graph6: missing vertex-count header");
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == 126)
    throw std::length_error("graph6: long form (n > 62) not supported");
  if (head < kOffset || head > 126)
    throw std::invalid_argument("graph6: character out of range 63..126");
  const int n = head - kOffset;
  const int bits = pair_bit_count(n);
  const std::size_t expected = 1 + static_cast<std::size_t>(payload_bytes(n));
  if (line.size() < expected)
    throw std::invalid_argument("graph6: payload truncated for declared n");
  if (line.size() > expected)
    throw std::invalid_argument("graph6: trailing garbage after payload");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int v = 1; v < n && k < bits; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const unsigned char c = static_cast<unsigned char>(line[1 + k / 6]);
      if (c < kOffset || c > 126)
        throw std::invalid_argument("graph6: character out of range 63..126");
      const int bit = (c - kOffset) >> (5 - k % 6) & 1;
      if (bit) {
        rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      }
    }
  }
  // Padding bits must be zero or re-encoding would not be byte-identical.
  for (int j = bits; j < 6 * payload_bytes(n); ++j) {
    const unsigned char c = static_cast<unsigned char>(line[1 + j / 6]);
    if (c < kOffset || c > 126)
      throw std::invalid_argument("graph6: character out of range 63..126");
    if ((c - kOffset) >> (5 - j % 6) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_adjacency(n, rows);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxGraph6)
    throw std::length_error("graph6: short form limited to 62 vertices");
  std::string out(1 + static_cast<std::size_t>(payload_bytes(n)),
                  static_cast<char>(kOffset));
  out[0] = static_cast<char>(kOffset + n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (g.has_edge(u, v))
        out[1 + static_cast<std::size_t>(k) / 6] +=
            static_cast<char>(1 << (5 - k % 6));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  if (n < 0) throw std::invalid_argument("edge list: negative vertex count");
  if (n > kMaxVertices)
    throw std::length_error("edge list: vertex count exceeds the 64-vertex capacity");
  std::vector<std::pair<int, int>> edges;
  long long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge list: endpoint outside [0, n)");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw std::invalid_argument("edge list: non-numeric token");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out += '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (u > v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(u);
        out += '\n';
      }
  return out;
}

}  // namespace edskit
