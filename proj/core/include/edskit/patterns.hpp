#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edskit/graph.hpp"

namespace edskit {

inline constexpr int kMaxPatternVertices = 7;

/// Named small forbidden pattern (3..7 vertices).
struct Pattern {
  std::string name;
  Graph graph;
};

/// Injective map pattern-vertex -> host-vertex; position i holds the host
/// image of pattern vertex i. Host vertices are always original labels.
using Embedding = std::vector<int>;

/// Fixed catalog: P4, P5, P6, P7, C4, claw, banner, bull, S113, S122, 2P3.
/// All entries are connected except 2P3. The names double as the stable
/// identifiers accepted by the command line (--forbid P6,banner).
const std::vector<Pattern>& catalog();

/// Catalog entry lookup; throws std::invalid_argument for unknown names.
const Pattern& pattern_by_name(std::string_view name);

/// Searches host for an induced occurrence of p. Backtracks over pattern
/// vertices in a fixed order (descending pattern degree, index as tie-break)
/// and tries host candidates in ascending order, so the first hit, which is
/// the returned embedding, realizes the lexicographically least host tuple
/// under that pattern-vertex order. The induced condition (edges and
/// non-edges both preserved) is enforced at every extension.
std::optional<Embedding> find_induced(const Graph& host, const Pattern& p);

/// Re-checks an embedding's induced condition by direct edge tests.
bool is_valid_embedding(const Graph& host, const Pattern& p, const Embedding& e);

struct FreeResult {
  bool free;
  /// First witness in ps order when not free.
  std::optional<std::pair<Pattern, Embedding>> witness;
};

/// True with no witness iff no pattern in ps embeds into g.
FreeResult is_f_free(const Graph& g, std::span<const Pattern> ps);

struct ClassReport {
  /// Pattern name -> g is free of it, in catalog order.
  std::vector<std::pair<std::string, bool>> free;
  bool p6_banner_free;
};

/// Per-pattern membership over the full catalog plus the combined
/// (P6, banner)-free flag.
ClassReport class_report(const Graph& g);

}  // namespace edskit
