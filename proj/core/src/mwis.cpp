#include "edskit/mwis.hpp"

#include <stdexcept>

namespace edskit {
namespace {

constexpr int kOracleCap = 24;

void check_weights(const Graph& g, std::span<const int> w) {
  if (w.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("weight vector length must equal n");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("weights must be nonnegative");
}

std::int64_t mask_weight(std::uint64_t mask, std::span<const int> w) {
  std::int64_t total = 0;
  for (int v : VertexSet(mask)) total += w[static_cast<std::size_t>(v)];
  return total;
}

struct MwisSearch {
  const Graph& g;
  std::span<const int> w;
  VertexSet best_set;
  std::int64_t best_weight = -1;
  std::uint64_t nodes = 0;

  void offer(std::uint64_t chosen, std::int64_t weight) {
    if (weight > best_weight ||
        (weight == best_weight && lex_less(VertexSet(chosen), best_set))) {
      best_weight = weight;
      best_set = VertexSet(chosen);
    }
  }

  void run(std::uint64_t alive, std::uint64_t chosen, std::int64_t weight) {
    ++nodes;
    // Neighborhood-domination reduction: a vertex strictly outweighing its
    // remaining neighbors belongs to every optimum of this subproblem (this
    // also picks up isolated vertices of positive weight).
    bool again = true;
    while (again) {
      again = false;
      for (int v : VertexSet(alive)) {
        const std::uint64_t nbrs = g.neighbors(v).bits() & alive;
        if (w[static_cast<std::size_t>(v)] > mask_weight(nbrs, w)) {
          chosen |= std::uint64_t{1} << v;
          weight += w[static_cast<std::size_t>(v)];
          alive &= ~(nbrs | std::uint64_t{1} << v);
          again = true;
          break;
        }
      }
    }
    const std::int64_t rest = mask_weight(alive, w);
    if (weight + rest < best_weight) return;
    if (alive == 0) {
      offer(chosen, weight);
      return;
    }
    int branch = -1, branch_deg = -1;
    for (int v : VertexSet(alive)) {
      const int d = std::popcount(g.neighbors(v).bits() & alive);
      if (d > branch_deg) {
        branch = v;
        branch_deg = d;
      }
    }
    const std::uint64_t closed =
        (g.neighbors(branch).bits() | std::uint64_t{1} << branch) & alive;
    run(alive & ~closed, chosen | std::uint64_t{1} << branch,
        weight + w[static_cast<std::size_t>(branch)]);
    run(alive & ~(std::uint64_t{1} << branch), chosen, weight);
  }
};

struct MwdsSearch {
  const Graph& g;
  std::span<const int> w;
  std::uint64_t all;
  VertexSet best_set;
  std::int64_t best_weight = 0;
  std::uint64_t nodes = 0;

  void run(std::uint64_t dominated, std::uint64_t excluded, std::uint64_t chosen,
           std::int64_t weight) {
    ++nodes;
    if (weight >= best_weight) return;
    if (dominated == all) {
      best_weight = weight;
      best_set = VertexSet(chosen);
      return;
    }
    const int u = std::countr_zero(~dominated & all);
    // Some member of N[u] must be in any dominating set; earlier candidates
    // are barred from later branches so no set is generated twice.
    std::uint64_t barred = excluded;
    for (int v : g.closed_neighborhood(u) - VertexSet(excluded)) {
      run(dominated | (g.closed_neighborhood(v).bits() & all), barred,
          chosen | std::uint64_t{1} << v, weight + w[static_cast<std::size_t>(v)]);
      barred |= std::uint64_t{1} << v;
    }
  }
};

}  // namespace

SolveResult mwis_exact(const Graph& g, std::span<const int> weights) {
  check_weights(g, weights);
  MwisSearch search{g, weights, VertexSet()};
  search.run(g.vertices().bits(), 0, 0);
  return {search.best_set, search.best_weight, search.nodes};
}

SolveResult mwis_oracle(const Graph& g, std::span<const int> weights) {
  const int n = g.vertex_count();
  if (n > kOracleCap)
    throw std::length_error("mwis_oracle limited to 24 vertices");
  check_weights(g, weights);
  VertexSet best;
  std::int64_t best_weight = -1;
  std::uint64_t nodes = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++nodes;
    if (!is_independent(g, VertexSet(mask))) continue;
    const std::int64_t weight = mask_weight(mask, weights);
    if (weight > best_weight ||
        (weight == best_weight && lex_less(VertexSet(mask), best))) {
      best_weight = weight;
      best = VertexSet(mask);
    }
  }
  return {best, best_weight, nodes};
}

SolveResult mwds_exact(const Graph& g, std::span<const int> weights) {
  const int n = g.vertex_count();
  if (n > kOracleCap)
    throw std::length_error("mwds_exact limited to 24 vertices");
  check_weights(g, weights);
  if (n == 0) return {VertexSet(), 0, 1};
  // The full vertex set always dominates; start from it.
  MwdsSearch search{g, weights, g.vertices().bits(),
                    g.vertices(), mask_weight(g.vertices().bits(), weights)};
  search.run(0, 0, 0, 0);
  return {search.best_set, search.best_weight, search.nodes};
}

}  // namespace edskit
