#pragma once

#include <cstdint>
#include <span>

#include "edskit/graph.hpp"

namespace edskit {

/// Exact solver output: the chosen set, its total weight, and the number of
/// search nodes visited.
struct SolveResult {
  VertexSet set;
  std::int64_t weight = 0;
  std::uint64_t nodes_explored = 0;
};

/// Exact maximum-weight independent set by branch and bound. Branches on a
/// maximum-degree vertex (lowest index on ties) with two children, exclude v
/// and include-v-delete-N[v]; the upper bound is the total remaining weight;
/// a vertex strictly outweighing its remaining neighborhood is always taken.
/// Deterministic: among equal-weight optima the lexicographically least set
/// is returned (prune only below the incumbent, never at it).
/// Weights must be nonnegative and one per vertex.
SolveResult mwis_exact(const Graph& g, std::span<const int> weights);

/// Exhaustive 2^n reference solver with the same contract as mwis_exact.
/// Throws std::length_error for n > 24.
SolveResult mwis_oracle(const Graph& g, std::span<const int> weights);

/// Exact minimum-weight dominating set, branching over the candidate
/// dominators of the lowest undominated vertex. Deterministic (fixed branch
/// order); oracle-grade, throws std::length_error for n > 24.
SolveResult mwds_exact(const Graph& g, std::span<const int> weights);

}  // namespace edskit
