#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edskit/graph.hpp"
#include "edskit/patterns.hpp"

namespace edskit {

/// Seeded Erdos-Renyi G(n, p). Pairs (u, v) with u < v are scanned in
/// ascending column-major order; an edge is kept when the next 53-bit
/// uniform draw from an std::mt19937_64 seeded with `seed` falls below p.
/// Bit-identical for a fixed (n, p, seed) on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Repairs g into a ps-free graph: while some pattern embeds, delete one
/// seeded-random vertex of the witness embedding. Terminates because the
/// vertex count strictly decreases; already-free input is returned as is.
Graph make_f_free(const Graph& g, std::span<const Pattern> ps, std::uint64_t seed);

/// The graph whose upper-triangle bitmask is `mask`, pairs in the same
/// column-major order graph6 uses: (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

/// Minimum upper-triangle bitmask over all vertex permutations (n <= 8).
std::uint64_t canonical_mask(int n, std::uint64_t mask);

/// All 2^(n(n-1)/2) labeled graphs on n vertices in ascending bitmask order.
/// With dedup, only canonical representatives are yielded, so the stream
/// visits each isomorphism class exactly once.
/// Throws std::length_error for n > 8.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int n, bool dedup = false);
  std::optional<Graph> next();

 private:
  int n_;
  bool dedup_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
  bool done_ = false;
};

enum class Theorem { T1, T2 };
std::string_view theorem_name(Theorem t);

/// T1: the square of a (P6, banner)-free graph with an EDS is P6-free.
/// T2: same hypothesis, banner-free.
struct TheoremVerdict {
  enum class Status { holds, not_in_class, no_eds, violation };
  Theorem theorem;
  Status status;
  /// Violation only: a verified induced embedding of the offending pattern
  /// (P6 for T1, banner for T2) in square(g).
  std::optional<Embedding> witness;
};

TheoremVerdict verify_theorem(const Graph& g, Theorem which);

/// Reproducible sampling recipe: same spec, same graph sequence.
struct SampleSpec {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> forbid;  ///< pattern names; repair target
  bool require_eds = false;
};

struct ViolationRecord {
  std::string graph6;
  Theorem theorem;
  Embedding embedding;
};

/// Orders violation records by (graph6 line, theorem, embedding).
bool violation_less(const ViolationRecord& a, const ViolationRecord& b);

struct VerificationReport {
  std::uint64_t graphs = 0;
  std::uint64_t not_in_class = 0;
  std::uint64_t no_eds = 0;
  std::uint64_t t1_holds = 0;
  std::uint64_t t2_holds = 0;
  std::uint64_t t1_violations = 0;
  std::uint64_t t2_violations = 0;
  /// Among no-EDS class members: how many squares contain the patterns
  /// anyway. Informational; the theorems assume EDS existence.
  std::uint64_t no_eds_square_p6 = 0;
  std::uint64_t no_eds_square_banner = 0;
  /// Lexicographically least violation among those found.
  std::optional<ViolationRecord> first_violation;

  std::uint64_t violations() const { return t1_violations + t2_violations; }
  bool ok() const { return violations() == 0; }

  /// Merging is associative and order-independent.
  void merge(const VerificationReport& other);

  /// key=value lines closed by a SUMMARY line.
  void write(std::ostream& out) const;
};

std::string violation_line(const ViolationRecord& v);

/// Samples `budget` graphs per spec (repaired to be forbid-free when the
/// list is non-empty) and tallies theorem verdicts. With require_eds, graphs
/// without an EDS are discarded and resampled, up to 1024 attempts per slot.
/// Violations are echoed to violation_stream as they are found. Fan-out over
/// `threads` workers leaves the report bit-identical.
VerificationReport search_counterexamples(const SampleSpec& spec,
                                          std::uint64_t budget, int threads = 1,
                                          std::ostream* violation_stream = nullptr);

/// verify_theorem over every labeled graph with 0..max_n vertices (max 8).
/// The 8-vertex tier covers one canonical representative per isomorphism
/// class instead of all 2^28 labelings; the verdicts are label-invariant.
VerificationReport verify_exhaustive(int max_n, int threads = 1,
                                     std::ostream* violation_stream = nullptr);

/// Draws graphs per spec without evaluating theorems; used by sampling
/// front ends. Same seeding scheme as search_counterexamples.
std::vector<Graph> sample_graphs(const SampleSpec& spec, std::uint64_t count);

}  // namespace edskit
