#include "edskit/harness.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "edskit/eds.hpp"
#include "edskit/graph6.hpp"

namespace edskit {
namespace {

constexpr int kEnumCap = 8;
constexpr std::uint64_t kSampleAttempts = 1024;

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t key) {
  return splitmix64(seed ^ splitmix64(key));
}

std::vector<Pattern> patterns_by_names(std::span<const std::string> names) {
  std::vector<Pattern> ps;
  ps.reserve(names.size());
  for (const std::string& name : names) ps.push_back(pattern_by_name(name));
  return ps;
}

std::string embedding_to_string(const Embedding& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

// Violations may surface concurrently from worker threads.
struct ViolationSink {
  std::ostream* stream = nullptr;
  std::mutex mutex;

  void emit(const ViolationRecord& violation) {
    if (!stream) return;
    const std::scoped_lock lock(mutex);
    *stream << violation_line(violation) << '\n';
  }
};

struct GraphOutcome {
  bool in_class = false;
  bool has_eds = false;
  std::optional<Embedding> p6_in_square;
  std::optional<Embedding> banner_in_square;
};

GraphOutcome evaluate_graph(const Graph& g) {
  static const std::vector<Pattern> klass = {pattern_by_name("P6"),
                                             pattern_by_name("banner")};
  GraphOutcome outcome;
  outcome.in_class = is_f_free(g, klass).free;
  if (!outcome.in_class) return outcome;
  outcome.has_eds = eds_via_square(g).exists();
  const Graph sq = square(g);
  outcome.p6_in_square = find_induced(sq, klass[0]);
  outcome.banner_in_square = find_induced(sq, klass[1]);
  return outcome;
}

void fold_outcome(VerificationReport& report, const Graph& g,
                  const GraphOutcome& outcome, ViolationSink& sink) {
  ++report.graphs;
  if (!outcome.in_class) {
    ++report.not_in_class;
    return;
  }
  if (!outcome.has_eds) {
    ++report.no_eds;
    if (outcome.p6_in_square) ++report.no_eds_square_p6;
    if (outcome.banner_in_square) ++report.no_eds_square_banner;
    return;
  }
  const auto record = [&](Theorem t, const std::optional<Embedding>& witness) {
    if (!witness) {
      (t == Theorem::T1 ? report.t1_holds : report.t2_holds) += 1;
      return;
    }
    (t == Theorem::T1 ? report.t1_violations : report.t2_violations) += 1;
    // graph6 covers n <= 62; 63- and 64-vertex samples fall back to the
    // edge-list text so a finding is never lost to the codec cap.
    ViolationRecord violation{
        g.vertex_count() <= 62 ? emit_graph6(g) : emit_edge_list(g), t,
        *witness};
    sink.emit(violation);
    if (!report.first_violation ||
        violation_less(violation, *report.first_violation))
      report.first_violation = std::move(violation);
  };
  record(Theorem::T1, outcome.p6_in_square);
  record(Theorem::T2, outcome.banner_in_square);
}

// Chunked deterministic fan-out: worker k handles indices [k*step, ...) and
// partial reports merge in index order.
template <typename Fn>
VerificationReport parallel_tally(std::uint64_t count, int threads, Fn per_index) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                             count, 256))));
  std::vector<VerificationReport> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) per_index(parts[0], i);
  } else {
    const std::uint64_t step = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int k = 0; k < workers; ++k) {
      const std::uint64_t lo = step * static_cast<std::uint64_t>(k);
      const std::uint64_t hi = std::min(count, lo + step);
      pool.emplace_back([&, k, lo, hi] {
        for (std::uint64_t i = lo; i < hi; ++i)
          per_index(parts[static_cast<std::size_t>(k)], i);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  VerificationReport report;
  for (const VerificationReport& part : parts) report.merge(part);
  return report;
}

Graph draw_sample(const SampleSpec& spec, std::span<const Pattern> ps,
                  std::uint64_t index, bool* found) {
  const std::uint64_t attempts = spec.require_eds ? kSampleAttempts : 1;
  for (std::uint64_t a = 0; a < attempts; ++a) {
    const std::uint64_t key = index * (2 * kSampleAttempts) + 2 * a;
    Graph g = random_graph(spec.n, spec.p, sub_seed(spec.seed, key));
    if (!ps.empty()) g = make_f_free(g, ps, sub_seed(spec.seed, key + 1));
    if (!spec.require_eds || eds_via_square(g).exists()) {
      *found = true;
      return g;
    }
  }
  *found = false;
  return Graph();
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("edge probability must be within [0, 1]");
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kMaxVertices)
    throw std::length_error("vertex count exceeds the 64-vertex capacity");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (next_uniform(rng) < p) {
        rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      }
  return Graph::from_adjacency(n, rows);
}

Graph make_f_free(const Graph& g, std::span<const Pattern> ps,
                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph current = g;
  for (;;) {
    const FreeResult check = is_f_free(current, ps);
    if (check.free) return current;
    const Embedding& e = check.witness->second;
    const int victim = e[rng() % e.size()];
    VertexSet keep = current.vertices();
    keep.erase(victim);
    current = induced_subgraph(current, keep);
  }
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  if (n * (n - 1) / 2 > 64)
    throw std::length_error("upper-triangle bitmask limited to 11 vertices");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1u) {
        rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      }
  return Graph::from_adjacency(n, rows);
}

std::uint64_t mask_from_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n * (n - 1) / 2 > 64)
    throw std::length_error("upper-triangle bitmask limited to 11 vertices");
  std::uint64_t mask = 0;
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (g.has_edge(u, v)) mask |= std::uint64_t{1} << k;
  return mask;
}

namespace {

struct PairTable {
  int count = 0;
  std::uint8_t u[28];
  std::uint8_t v[28];
};

PairTable pair_table(int n) {
  PairTable t;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      t.u[t.count] = static_cast<std::uint8_t>(u);
      t.v[t.count] = static_cast<std::uint8_t>(v);
      ++t.count;
    }
  return t;
}

// Walks the permuted mask most-significant pair first so the comparison with
// the reference mask can stop at the first differing bit.
enum class MaskOrder { smaller, equal, larger };

MaskOrder compare_permuted(const PairTable& pairs, std::uint64_t mask,
                           std::span<const int> perm, const bool (*adj)[8]) {
  for (int k = pairs.count - 1; k >= 0; --k) {
    const bool bit =
        adj[perm[pairs.u[k]]][perm[pairs.v[k]]];
    const bool ref = (mask >> k) & 1u;
    if (bit != ref) return bit < ref ? MaskOrder::smaller : MaskOrder::larger;
  }
  return MaskOrder::equal;
}

void unpack_adjacency(const PairTable& pairs, std::uint64_t mask, bool (*adj)[8]) {
  for (int k = 0; k < pairs.count; ++k)
    if ((mask >> k) & 1u) {
      adj[pairs.u[k]][pairs.v[k]] = true;
      adj[pairs.v[k]][pairs.u[k]] = true;
    }
}

// Early-exit form of the canonical test: any permutation producing a smaller
// mask rejects immediately.
bool is_mask_canonical(int n, std::uint64_t mask) {
  const PairTable pairs = pair_table(n);
  bool adj[8][8] = {};
  unpack_adjacency(pairs, mask, adj);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (compare_permuted(pairs, mask, perm, adj) == MaskOrder::smaller)
      return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  if (n > kEnumCap) throw std::length_error("canonical_mask limited to 8 vertices");
  const PairTable pairs = pair_table(n);
  bool adj[8][8] = {};
  unpack_adjacency(pairs, mask, adj);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = mask;
  do {
    if (compare_permuted(pairs, best, perm, adj) == MaskOrder::smaller) {
      std::uint64_t m = 0;
      for (int k = 0; k < pairs.count; ++k)
        if (adj[perm[pairs.u[k]]][perm[pairs.v[k]]]) m |= std::uint64_t{1} << k;
      best = m;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

GraphEnumerator::GraphEnumerator(int n, bool dedup) : n_(n), dedup_(dedup) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kEnumCap)
    throw std::length_error("exhaustive enumeration limited to 8 vertices");
  const int bits = n * (n - 1) / 2;
  end_ = bits == 0 ? 0 : (std::uint64_t{1} << bits) - 1;
}

std::optional<Graph> GraphEnumerator::next() {
  while (!done_) {
    const std::uint64_t mask = mask_;
    if (mask_ == end_) done_ = true;
    ++mask_;
    if (!dedup_ || is_mask_canonical(n_, mask))
      return graph_from_mask(n_, mask);
  }
  return std::nullopt;
}

std::string_view theorem_name(Theorem t) {
  return t == Theorem::T1 ? "T1" : "T2";
}

TheoremVerdict verify_theorem(const Graph& g, Theorem which) {
  static const std::vector<Pattern> klass = {pattern_by_name("P6"),
                                             pattern_by_name("banner")};
  if (!is_f_free(g, klass).free)
    return {which, TheoremVerdict::Status::not_in_class, std::nullopt};
  if (!eds_via_square(g).exists())
    return {which, TheoremVerdict::Status::no_eds, std::nullopt};
  const Pattern& target = which == Theorem::T1 ? klass[0] : klass[1];
  if (auto witness = find_induced(square(g), target))
    return {which, TheoremVerdict::Status::violation, std::move(witness)};
  return {which, TheoremVerdict::Status::holds, std::nullopt};
}

bool violation_less(const ViolationRecord& a, const ViolationRecord& b) {
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  if (a.theorem != b.theorem) return a.theorem < b.theorem;
  return a.embedding < b.embedding;
}

void VerificationReport::merge(const VerificationReport& other) {
  graphs += other.graphs;
  not_in_class += other.not_in_class;
  no_eds += other.no_eds;
  t1_holds += other.t1_holds;
  t2_holds += other.t2_holds;
  t1_violations += other.t1_violations;
  t2_violations += other.t2_violations;
  no_eds_square_p6 += other.no_eds_square_p6;
  no_eds_square_banner += other.no_eds_square_banner;
  if (other.first_violation &&
      (!first_violation || violation_less(*other.first_violation, *first_violation)))
    first_violation = other.first_violation;
}

void VerificationReport::write(std::ostream& out) const {
  out << "graphs=" << graphs << '\n'
      << "not_in_class=" << not_in_class << '\n'
      << "no_eds=" << no_eds << '\n'
      << "t1_holds=" << t1_holds << '\n'
      << "t2_holds=" << t2_holds << '\n'
      << "t1_violations=" << t1_violations << '\n'
      << "t2_violations=" << t2_violations << '\n'
      << "no_eds_square_p6=" << no_eds_square_p6 << '\n'
      << "no_eds_square_banner=" << no_eds_square_banner << '\n';
  if (first_violation) out << violation_line(*first_violation) << '\n';
  out << "SUMMARY graphs=" << graphs << " violations=" << violations()
      << " ok=" << (ok() ? "true" : "false") << '\n';
}

std::string violation_line(const ViolationRecord& v) {
  std::string out = "VIOLATION theorem=";
  out += theorem_name(v.theorem);
  out += " graph6=";
  out += v.graph6;
  out += " embedding=";
  out += embedding_to_string(v.embedding);
  return out;
}

VerificationReport search_counterexamples(const SampleSpec& spec,
                                          std::uint64_t budget, int threads,
                                          std::ostream* violation_stream) {
  const std::vector<Pattern> ps = patterns_by_names(spec.forbid);
  ViolationSink sink;
  sink.stream = violation_stream;
  return parallel_tally(budget, threads,
                        [&](VerificationReport& part, std::uint64_t i) {
                          bool found = false;
                          const Graph g = draw_sample(spec, ps, i, &found);
                          if (found)
                            fold_outcome(part, g, evaluate_graph(g), sink);
                        });
}

VerificationReport verify_exhaustive(int max_n, int threads,
                                     std::ostream* violation_stream) {
  if (max_n > kEnumCap)
    throw std::length_error("exhaustive enumeration limited to 8 vertices");
  VerificationReport report;
  ViolationSink sink;
  sink.stream = violation_stream;
  for (int n = 0; n <= max_n; ++n) {
    // The 8-vertex tier walks canonical representatives only; every verdict
    // is isomorphism-invariant, so one graph per class decides the class.
    const bool dedup = n == 8;
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    report.merge(parallel_tally(total, threads,
                                [&](VerificationReport& part, std::uint64_t mask) {
                                  if (dedup && !is_mask_canonical(n, mask)) return;
                                  const Graph g = graph_from_mask(n, mask);
                                  fold_outcome(part, g, evaluate_graph(g), sink);
                                }));
  }
  return report;
}

std::vector<Graph> sample_graphs(const SampleSpec& spec, std::uint64_t count) {
  const std::vector<Pattern> ps = patterns_by_names(spec.forbid);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    bool found = false;
    Graph g = draw_sample(spec, ps, i, &found);
    if (!found)
      throw std::runtime_error(
          "sampling gave up: no qualifying graph within the attempt budget");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace edskit
