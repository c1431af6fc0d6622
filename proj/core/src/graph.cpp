#include "edskit/graph.hpp"

#include <stdexcept>

namespace edskit {

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices)
      throw std::out_of_range("vertex index outside [0, 64)");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int va = std::countr_zero(x), vb = std::countr_zero(y);
    if (va != vb) return va < vb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kMaxVertices)
    throw std::length_error("vertex count exceeds the 64-vertex capacity");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint outside [0, n)");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph(n, std::move(adj));
}

Graph Graph::from_edge_list(int n,
                            std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(int n, std::span<const std::uint64_t> rows) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kMaxVertices)
    throw std::length_error("vertex count exceeds the 64-vertex capacity");
  if (rows.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("adjacency row count must equal n");
  const std::uint64_t mask = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = rows[static_cast<std::size_t>(v)];
    if ((row & ~mask) != 0)
      throw std::invalid_argument("adjacency row references a vertex >= n");
    if ((row >> v) & 1u) throw std::invalid_argument("self-loop rejected");
    for (int u : VertexSet(row))
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1u))
        throw std::invalid_argument("adjacency rows are not symmetric");
  }
  return Graph(n, std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> cells)
    : n_(n), cells_(std::move(cells)) {}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> cells(static_cast<std::size_t>(n) * n,
                         DistanceMatrix::kUnreachable);
  for (int s = 0; s < n; ++s) {
    int* row = cells.data() + static_cast<std::size_t>(s) * n;
    std::uint64_t frontier = std::uint64_t{1} << s;
    std::uint64_t visited = frontier;
    row[s] = 0;
    int d = 0;
    while (frontier != 0) {
      ++d;
      std::uint64_t next = 0;
      for (int u : VertexSet(frontier)) next |= g.neighbors(u).bits();
      next &= ~visited;
      for (int u : VertexSet(next)) row[u] = d;
      visited |= next;
      frontier = next;
    }
  }
  return DistanceMatrix(n, std::move(cells));
}

Graph square(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = g.neighbors(v).bits();
    for (int u : g.neighbors(v)) row |= g.neighbors(u).bits();
    row &= ~(std::uint64_t{1} << v);
    rows[static_cast<std::size_t>(v)] = row;
  }
  return Graph::from_adjacency(n, rows);
}

WeightVector domination_weights(const Graph& g) {
  WeightVector w(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    w[static_cast<std::size_t>(v)] = g.degree(v) + 1;
  return w;
}

bool is_independent(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw std::out_of_range("vertex set is not a subset of V");
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw std::out_of_range("vertex set is not a subset of V");
  const std::vector<int> keep = s.to_vector();
  const int m = static_cast<int>(keep.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(keep[static_cast<std::size_t>(i)],
                     keep[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  return Graph::from_adjacency(m, rows);
}

}  // namespace edskit
