#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edskit/graph.hpp"
#include "edskit/mwis.hpp"

namespace edskit {

/// Outcome of an efficient-dominating-set decision. The empty graph has the
/// empty EDS (both conditions hold vacuously).
struct EdsResult {
  std::optional<VertexSet> set;  ///< engaged iff an EDS exists
  std::string method;            ///< "brute" or "square"
  bool exists() const { return set.has_value(); }
};

/// True iff d is independent and every vertex outside d has exactly one
/// neighbor in d.
bool verify_eds(const Graph& g, VertexSet d);

/// Exact-cover decision: d is an EDS iff the closed neighborhoods {N[v] :
/// v in d} partition V. Explores the whole cover tree and returns the
/// lexicographically least EDS when several exist.
/// Throws std::length_error for n > 24.
EdsResult eds_brute_force(const Graph& g);

/// Square-graph reduction: under w(v) = deg(v) + 1, the maximum independent
/// set weight of square(g) reaches n exactly when g has an EDS, and the
/// optimal set is then one. The returned set is re-verified against g.
EdsResult eds_via_square(const Graph& g);

/// Machine check of the three-way equivalence between EDS existence, the
/// minimum dominating-set weight reaching n, and the maximum independent-set
/// weight of the square reaching n (all under w(v) = deg(v) + 1). It holds
/// for every graph, not only special classes; `consistent` flags it.
/// Throws std::length_error for n > 24.
struct EquivalenceReport {
  bool eds_exists;
  bool mwds_attains_n;
  bool mwis_square_attains_n;
  bool consistent;
  std::int64_t mwds_weight;
  std::int64_t mwis_square_weight;
};
EquivalenceReport check_equivalence(const Graph& g);

}  // namespace edskit
