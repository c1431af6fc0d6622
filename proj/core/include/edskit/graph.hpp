#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edskit {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices in [0, 64), one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// Throws std::out_of_range for a vertex outside [0, 64).
  static VertexSet of(std::initializer_list<int> vertices);

  /// {0, 1, ..., n-1}.
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= kMaxVertices ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Lowest member; the set must be non-empty.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector() const;
  std::string to_string() const;  // "{0,3}"

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by their ascending vertex sequences: {0,3} < {1,2}, and a
/// proper prefix sorts before its extensions ({1} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

/// Immutable simple undirected graph on vertices 0..n-1 with one bitset
/// adjacency row per vertex. The capacity is 64 vertices so a row and a
/// vertex set each fit in a machine word.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph with exactly the given edges, deduplicated.
  /// Throws std::length_error when n exceeds the capacity,
  /// std::invalid_argument on a self-loop or negative n, and
  /// std::out_of_range on an endpoint >= n.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n,
                              std::initializer_list<std::pair<int, int>> edges);

  /// Builds from raw adjacency rows, which must be symmetric, irreflexive
  /// and confined to the first n bits.
  static Graph from_adjacency(int n, std::span<const std::uint64_t> rows);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const {
    return VertexSet(adj_[v] | std::uint64_t{1} << v);
  }
  VertexSet vertices() const { return VertexSet::first(n_); }

  bool operator==(const Graph&) const = default;

 private:
  Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// All-pairs hop distances. Disconnected pairs hold the kUnreachable
/// sentinel; no finite stand-in value exists anywhere in the matrix.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> cells);

  int size() const { return n_; }
  int at(int u, int v) const { return cells_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
  /// True when u and v are connected and at most k hops apart.
  bool within(int u, int v, int k) const {
    int d = at(u, v);
    return d != kUnreachable && d <= k;
  }

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// Per-vertex nonnegative integer weights, indexed by vertex.
using WeightVector = std::vector<int>;

/// BFS-exact hop distances from every vertex.
DistanceMatrix distance_matrix(const Graph& g);

/// Same vertex set; u,v adjacent iff they are one or two hops apart in g.
/// Computed by the neighbor-of-neighbor rule.
Graph square(const Graph& g);

/// w(v) = deg(v) + 1 for every v.
WeightVector domination_weights(const Graph& g);

/// True iff no edge of g has both endpoints in s.
bool is_independent(const Graph& g, VertexSet s);

/// Subgraph on s, relabeled 0..|s|-1 in ascending original-index order.
Graph induced_subgraph(const Graph& g, VertexSet s);

}  // namespace edskit
