#include "edskit/eds.hpp"

#include <stdexcept>

namespace edskit {
namespace {

constexpr int kBruteCap = 24;

struct CoverSearch {
  const Graph& g;
  std::uint64_t all;
  std::optional<VertexSet> best;

  void run(std::uint64_t covered, std::uint64_t chosen) {
    if (covered == all) {
      VertexSet d(chosen);
      if (!best || lex_less(d, *best)) best = d;
      return;
    }
    const int u = std::countr_zero(~covered & all);
    for (int v : g.closed_neighborhood(u)) {
      const std::uint64_t block = g.closed_neighborhood(v).bits();
      if (block & covered) continue;  // would cover some vertex twice
      run(covered | block, chosen | std::uint64_t{1} << v);
    }
  }
};

}  // namespace

bool verify_eds(const Graph& g, VertexSet d) {
  if (!d.is_subset_of(g.vertices()))
    throw std::out_of_range("vertex set is not a subset of V");
  if (!is_independent(g, d)) return false;
  for (int v : g.vertices() - d)
    if ((g.neighbors(v) & d).size() != 1) return false;
  return true;
}

EdsResult eds_brute_force(const Graph& g) {
  if (g.vertex_count() > kBruteCap)
    throw std::length_error("eds_brute_force limited to 24 vertices");
  CoverSearch search{g, g.vertices().bits(), std::nullopt};
  search.run(0, 0);
  return {search.best, "brute"};
}

EdsResult eds_via_square(const Graph& g) {
  const WeightVector w = domination_weights(g);
  const Graph h = square(g);
  const SolveResult r = mwis_exact(h, w);
  if (r.weight != g.vertex_count()) return {std::nullopt, "square"};
  if (!verify_eds(g, r.set))
    throw std::logic_error("square reduction produced a non-EDS witness");
  return {r.set, "square"};
}

EquivalenceReport check_equivalence(const Graph& g) {
  if (g.vertex_count() > kBruteCap)
    throw std::length_error("check_equivalence limited to 24 vertices");
  const WeightVector w = domination_weights(g);
  const std::int64_t n = g.vertex_count();
  EquivalenceReport report{};
  report.eds_exists = eds_brute_force(g).exists();
  report.mwds_weight = mwds_exact(g, w).weight;
  report.mwds_attains_n = report.mwds_weight == n;
  report.mwis_square_weight = mwis_exact(square(g), w).weight;
  report.mwis_square_attains_n = report.mwis_square_weight == n;
  report.consistent = report.eds_exists == report.mwds_attains_n &&
                      report.mwds_attains_n == report.mwis_square_attains_n;
  return report;
}

}  // namespace edskit
