#include <doctest.h>

#include <stdexcept>

#include "edskit/graph.hpp"
#include "edskit/harness.hpp"
#include "edskit/mwis.hpp"
#include "oracles.hpp"

using namespace edskit;

namespace {

Graph path(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(t, edges);
}

Graph cycle(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < t; ++v) edges.emplace_back(v, (v + 1) % t);
  return Graph::from_edge_list(t, edges);
}

}  // namespace

TEST_SUITE_BEGIN("mwis");

TEST_CASE("mwis on the stated examples") {
  const WeightVector w123 = {1, 2, 3};
  const SolveResult edgeless = mwis_exact(Graph::from_edge_list(3, {}), w123);
  CHECK(edgeless.set == VertexSet::of({0, 1, 2}));
  CHECK(edgeless.weight == 6);

  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  const SolveResult clique = mwis_exact(k3, w123);
  CHECK(clique.set == VertexSet::of({2}));
  CHECK(clique.weight == 3);

  const WeightVector ones = {1, 1, 1, 1, 1};
  CHECK(mwis_exact(cycle(5), ones).weight == 2);
  CHECK(mwis_oracle(cycle(5), ones).weight == 2);
}

TEST_CASE("oracle on the stated examples") {
  const SolveResult p4 = mwis_oracle(path(4), WeightVector{2, 3, 3, 2});
  CHECK(p4.weight == 5);
  CHECK(p4.set == VertexSet::of({0, 2}));  // lex-least of the weight-5 ties
  CHECK(p4.nodes_explored == 16);

  const SolveResult k1 = mwis_oracle(Graph::from_edge_list(1, {}), WeightVector{7});
  CHECK(k1.set == VertexSet::of({0}));
  CHECK(k1.weight == 7);

  const SolveResult c4 = mwis_oracle(cycle(4), WeightVector{3, 3, 3, 3});
  CHECK(c4.weight == 6);
  CHECK(c4.set == VertexSet::of({0, 2}));
}

TEST_CASE("exact solver keeps the oracle's lexicographic tie-break") {
  CHECK(mwis_exact(cycle(4), WeightVector{3, 3, 3, 3}).set == VertexSet::of({0, 2}));
  CHECK(mwis_exact(path(4), WeightVector{2, 3, 3, 2}).set == VertexSet::of({0, 2}));
  CHECK(mwis_exact(Graph(), WeightVector{}).set == VertexSet());
  CHECK(mwis_exact(Graph(), WeightVector{}).weight == 0);
}

TEST_CASE("mwds on the stated examples") {
  const SolveResult k1 = mwds_exact(Graph::from_edge_list(1, {}), WeightVector{1});
  CHECK(k1.set == VertexSet::of({0}));
  CHECK(k1.weight == 1);

  const SolveResult p4 = mwds_exact(path(4), WeightVector{2, 3, 3, 2});
  CHECK(p4.set == VertexSet::of({0, 3}));
  CHECK(p4.weight == 4);

  const SolveResult c4 = mwds_exact(cycle(4), WeightVector{3, 3, 3, 3});
  CHECK(c4.weight == 6);
  CHECK(testing::is_dominating(cycle(4), c4.set));
}

TEST_CASE("exact matches oracle exhaustively to n = 5") {
  for (int n = 0; n <= 5; ++n) {
    GraphEnumerator en(n);
    while (auto g = en.next()) {
      const WeightVector dom = domination_weights(*g);
      CHECK(mwis_exact(*g, dom).weight == mwis_oracle(*g, dom).weight);
      const WeightVector rnd =
          testing::random_weights(n, 0, 10, mask_from_graph(*g) + 17);
      const SolveResult fast = mwis_exact(*g, rnd);
      const SolveResult slow = mwis_oracle(*g, rnd);
      CHECK(fast.weight == slow.weight);
      CHECK(is_independent(*g, fast.set));
      CHECK(testing::set_weight(rnd, fast.set) == fast.weight);
    }
  }
}

TEST_CASE("exact matches oracle on random weighted instances") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const Graph g = random_graph(n, 0.1 + 0.8 * static_cast<double>(seed % 5) / 5,
                                 seed * 31 + 7);
    const WeightVector w = testing::random_weights(n, 0, 10, seed ^ 0x5555);
    const SolveResult fast = mwis_exact(g, w);
    const SolveResult slow = mwis_oracle(g, w);
    CHECK(fast.weight == slow.weight);
    CHECK(fast.set == slow.set);  // shared lexicographic tie-break
    CHECK(is_independent(g, fast.set));
  }
}

TEST_CASE("mwds feasibility and optimality against enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const Graph g = random_graph(n, 0.4, seed * 13 + 3);
    const WeightVector w = testing::random_weights(n, 1, 9, seed);
    const SolveResult got = mwds_exact(g, w);
    CHECK(testing::is_dominating(g, got.set));
    CHECK(testing::set_weight(w, got.set) == got.weight);
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!testing::is_dominating(g, VertexSet(mask))) continue;
      const std::int64_t cand = testing::set_weight(w, VertexSet(mask));
      if (best < 0 || cand < best) best = cand;
    }
    CHECK(got.weight == best);
  }
}

TEST_CASE("adding an isolated vertex raises the optimum by its weight") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, 0.5, seed);
    WeightVector w = testing::random_weights(n, 1, 10, seed + 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) edges.emplace_back(u, v);
    const Graph extended = Graph::from_edge_list(n + 1, edges);
    const int k = 1 + static_cast<int>(seed % 7);
    WeightVector wk = w;
    wk.push_back(k);
    CHECK(mwis_exact(extended, wk).weight == mwis_exact(g, w).weight + k);
  }
}

TEST_CASE("guards and validation") {
  const Graph big = random_graph(25, 0.2, 1);
  const WeightVector w(25, 1);
  CHECK_THROWS_AS(mwis_oracle(big, w), std::length_error);
  CHECK_THROWS_AS(mwds_exact(big, w), std::length_error);
  CHECK(mwis_exact(big, w).weight > 0);  // no cap on the branch-and-bound path
  CHECK_THROWS_AS(mwis_exact(path(4), WeightVector{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mwis_exact(path(4), WeightVector{1, -2, 1, 1}),
                  std::invalid_argument);
}

TEST_SUITE_END();
