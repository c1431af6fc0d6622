#include "edskit/patterns.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace edskit {
namespace {

Graph path(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(t, edges);
}

std::vector<Pattern> build_catalog() {
  std::vector<Pattern> c;
  c.push_back({"P4", path(4)});
  c.push_back({"P5", path(5)});
  c.push_back({"P6", path(6)});
  c.push_back({"P7", path(7)});
  c.push_back({"C4", Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});
  c.push_back({"claw", Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}})});
  // Chordless 4-cycle 0-1-2-3 plus a pendant vertex 4 with its one neighbor
  // on the cycle.
  c.push_back({"banner",
               Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})});
  // Triangle 0,1,2 with horns 3-0 and 4-1.
  c.push_back({"bull",
               Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}})});
  // Spiders: center 0 with arms of the named lengths.
  c.push_back({"S113",
               Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}})});
  c.push_back({"S122",
               Graph::from_edge_list(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}})});
  // Two disjoint paths on three vertices; the one disconnected entry.
  c.push_back({"2P3",
               Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})});
  return c;
}

struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;            // pattern vertices in search order
  std::vector<int> image;            // image[t] hosts order[t]
  std::array<std::uint64_t, 7> degree_ok{};  // hosts with degree >= d
  std::uint64_t used = 0;

  bool extend(int t) {
    const int k = pattern.vertex_count();
    if (t == k) return true;
    const int q = order[static_cast<std::size_t>(t)];
    std::uint64_t cand =
        degree_ok[static_cast<std::size_t>(pattern.degree(q))] & ~used;
    for (int s = 0; s < t && cand != 0; ++s) {
      const int hv = image[static_cast<std::size_t>(s)];
      const std::uint64_t row = host.neighbors(hv).bits();
      cand &= pattern.has_edge(q, order[static_cast<std::size_t>(s)]) ? row : ~row;
    }
    for (int v : VertexSet(cand)) {
      image[static_cast<std::size_t>(t)] = v;
      used |= std::uint64_t{1} << v;
      if (extend(t + 1)) return true;
      used &= ~(std::uint64_t{1} << v);
    }
    return false;
  }
};

}  // namespace

const std::vector<Pattern>& catalog() {
  static const std::vector<Pattern> c = build_catalog();
  return c;
}

const Pattern& pattern_by_name(std::string_view name) {
  for (const Pattern& p : catalog())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

std::optional<Embedding> find_induced(const Graph& host, const Pattern& p) {
  const int k = p.graph.vertex_count();
  const int n = host.vertex_count();
  if (k > kMaxPatternVertices)
    throw std::length_error("pattern exceeds the 7-vertex detection limit");
  if (k > n) return std::nullopt;

  InducedSearch search{host, p.graph, {}, std::vector<int>(static_cast<std::size_t>(k))};
  search.order.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) search.order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return p.graph.degree(a) > p.graph.degree(b); });

  std::uint64_t mask = host.vertices().bits();
  for (int d = 0; d <= 6; ++d) {
    search.degree_ok[static_cast<std::size_t>(d)] = 0;
    for (int v : VertexSet(mask))
      if (host.degree(v) >= d)
        search.degree_ok[static_cast<std::size_t>(d)] |= std::uint64_t{1} << v;
  }

  if (!search.extend(0)) return std::nullopt;
  Embedding e(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t)
    e[static_cast<std::size_t>(search.order[static_cast<std::size_t>(t)])] =
        search.image[static_cast<std::size_t>(t)];
  return e;
}

bool is_valid_embedding(const Graph& host, const Pattern& p, const Embedding& e) {
  const int k = p.graph.vertex_count();
  if (static_cast<int>(e.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    const int hi = e[static_cast<std::size_t>(i)];
    if (hi < 0 || hi >= host.vertex_count()) return false;
    for (int j = i + 1; j < k; ++j) {
      const int hj = e[static_cast<std::size_t>(j)];
      if (hi == hj) return false;
      if (p.graph.has_edge(i, j) != host.has_edge(hi, hj)) return false;
    }
  }
  return true;
}

FreeResult is_f_free(const Graph& g, std::span<const Pattern> ps) {
  for (const Pattern& p : ps)
    if (auto e = find_induced(g, p)) return {false, std::pair(p, *e)};
  return {true, std::nullopt};
}

ClassReport class_report(const Graph& g) {
  ClassReport report;
  bool p6_free = true, banner_free = true;
  for (const Pattern& p : catalog()) {
    const bool free = !find_induced(g, p).has_value();
    report.free.emplace_back(p.name, free);
    if (p.name == "P6") p6_free = free;
    if (p.name == "banner") banner_free = free;
  }
  report.p6_banner_free = p6_free && banner_free;
  return report;
}

}  // namespace edskit
