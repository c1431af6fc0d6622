#pragma once

#include <string>
#include <string_view>

#include "edskit/graph.hpp"

namespace edskit {

/// Decodes one short-form graph6 line (n <= 62). Malformed input raises
/// std::invalid_argument with a distinct message per defect (missing header,
/// character out of range, truncated payload, trailing garbage, nonzero
/// padding); the long form (n > 62) raises std::length_error.
Graph parse_graph6(std::string_view line);

/// Canonical short-form graph6 encoding; parse_graph6(emit_graph6(g)) == g.
/// Throws std::length_error when g has more than 62 vertices.
std::string emit_graph6(const Graph& g);

/// Edge-list text: vertex count on the first line, then one "u v" pair per
/// line. Throws std::invalid_argument on malformed text.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace edskit
