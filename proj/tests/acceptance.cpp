// Acceptance suite: every release criterion at its stated corpus size and
// tolerance, one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "edskit/eds.hpp"
#include "edskit/graph.hpp"
#include "edskit/graph6.hpp"
#include "edskit/harness.hpp"
#include "edskit/mwis.hpp"
#include "edskit/patterns.hpp"
#include "oracles.hpp"

using namespace edskit;

namespace {

struct Outcome {
  bool pass = true;
  std::uint64_t cases = 0;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

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

// Criterion 1 corpus: all labeled graphs with n <= 6 plus 2000 seeded random
// graphs with n <= 20.
template <typename Fn>
void for_equivalence_corpus(Fn fn) {
  for (int n = 0; n <= 6; ++n) {
    GraphEnumerator en(n);
    while (auto g = en.next()) fn(*g);
  }
  const double ps[] = {0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.9};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(i % 20);
    fn(random_graph(n, ps[i % 7], 0xED500000 + i));
  }
}

Outcome criterion1_equivalence() {
  Outcome out;
  for_equivalence_corpus([&](const Graph& g) {
    ++out.cases;
    if (!check_equivalence(g).consistent)
      out.fail("inconsistent equivalence report on " + emit_graph6(g));
  });
  return out;
}

Outcome criterion2_decider_agreement() {
  Outcome out;
  for_equivalence_corpus([&](const Graph& g) {
    ++out.cases;
    const EdsResult a = eds_via_square(g);
    const EdsResult b = eds_brute_force(g);
    if (a.exists() != b.exists())
      out.fail("deciders disagree on " + emit_graph6(g));
    if (a.exists() && !(verify_eds(g, *a.set) && verify_eds(g, *b.set)))
      out.fail("witness fails verify_eds on " + emit_graph6(g));
  });
  return out;
}

Outcome criterion3_zero_violations() {
  Outcome out;
  const VerificationReport exhaustive = verify_exhaustive(7);
  out.cases += exhaustive.graphs;
  if (!exhaustive.ok()) out.fail("violation among labeled graphs with n <= 7");

  // >= 10000 repaired random class members sampled at 8 <= n <= 40.
  const double ps[] = {0.02, 0.05, 0.08, 0.12, 0.18};
  std::uint64_t members = 0;
  for (int n = 8; n <= 40; ++n)
    for (int pi = 0; pi < 5; ++pi) {
      const SampleSpec spec{n, ps[pi], 0xC0FFEE00 + static_cast<std::uint64_t>(n) * 8 +
                                static_cast<std::uint64_t>(pi),
                            {"P6", "banner"}, false};
      const VerificationReport report = search_counterexamples(spec, 61);
      members += report.graphs;
      if (!report.ok()) out.fail("violation among repaired random members");
      if (report.not_in_class != 0) out.fail("repair left a non-member in the stream");
    }
  out.cases += members;
  if (members < 10000) out.fail("random corpus smaller than 10000");
  return out;
}

Outcome criterion4_square_correctness() {
  Outcome out;
  const auto check = [&](const Graph& g) {
    ++out.cases;
    const Graph sq = square(g);
    const DistanceMatrix d = distance_matrix(g);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        if (sq.has_edge(u, v) != d.within(u, v, 2)) {
          out.fail("square mismatch on " + emit_graph6(g));
          return;
        }
  };
  for (int n = 0; n <= 6; ++n) {
    GraphEnumerator en(n);
    while (auto g = en.next()) check(*g);
  }
  const double ps[] = {0.04, 0.1, 0.25, 0.5, 0.8};
  for (std::uint64_t i = 0; i < 1000; ++i)
    check(random_graph(static_cast<int>(i % 41), ps[i % 5], 0x50AA0000 + i));
  return out;
}

Outcome criterion5_detector_completeness() {
  Outcome out;
  for (int n = 0; n <= 7; ++n) {
    GraphEnumerator en(n);
    while (auto g = en.next()) {
      for (const Pattern& p : catalog()) {
        ++out.cases;
        const auto fast = find_induced(*g, p);
        const auto slow = testing::naive_find_induced(*g, p.graph);
        if (fast.has_value() != slow.has_value()) {
          out.fail("detector/oracle mismatch for " + p.name + " on " +
                   emit_graph6(*g));
          return out;
        }
        if (fast && !is_valid_embedding(*g, p, *fast)) {
          out.fail("invalid witness for " + p.name + " on " + emit_graph6(*g));
          return out;
        }
      }
    }
  }
  return out;
}

Outcome criterion6_mwis_optimality() {
  Outcome out;
  const auto check = [&](const Graph& g, const WeightVector& w) {
    ++out.cases;
    const SolveResult fast = mwis_exact(g, w);
    const SolveResult slow = mwis_oracle(g, w);
    if (fast.weight != slow.weight)
      out.fail("optimal weight mismatch on " + emit_graph6(g));
    if (!is_independent(g, fast.set) ||
        testing::set_weight(w, fast.set) != fast.weight)
      out.fail("infeasible or mispriced set on " + emit_graph6(g));
  };
  for (int n = 0; n <= 6; ++n) {
    GraphEnumerator en(n);
    while (auto g = en.next()) {
      check(*g, domination_weights(*g));
      check(*g, testing::random_weights(n, 0, 10, mask_from_graph(*g) * 2 + 1));
    }
  }
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(i % 16);
    check(random_graph(n, ps[i % 5], 0x3315B000 + i),
          testing::random_weights(n, 0, 10, 0xBEEF + i));
  }
  return out;
}

Outcome criterion7_golden_cases() {
  Outcome out;
  out.cases = 5;
  const EdsResult p4s = eds_via_square(path(4));
  const EdsResult p4b = eds_brute_force(path(4));
  if (!(p4s.exists() && *p4s.set == VertexSet::of({0, 3}) && p4b.exists() &&
        *p4b.set == VertexSet::of({0, 3})))
    out.fail("P4 must yield the EDS {0,3}");
  if (eds_via_square(cycle(4)).exists() || eds_brute_force(cycle(4)).exists())
    out.fail("C4 must have no EDS");
  const EdsResult k1 = eds_via_square(Graph::from_edge_list(1, {}));
  if (!(k1.exists() && *k1.set == VertexSet::of({0})))
    out.fail("K1 must yield the EDS {0}");
  if (verify_theorem(path(5), Theorem::T1).status != TheoremVerdict::Status::holds ||
      verify_theorem(path(5), Theorem::T2).status != TheoremVerdict::Status::holds)
    out.fail("both theorems must hold on P5");
  if (verify_theorem(pattern_by_name("banner").graph, Theorem::T1).status !=
      TheoremVerdict::Status::not_in_class)
    out.fail("banner must be outside the class");
  return out;
}

Outcome criterion8_graph6_roundtrip() {
  Outcome out;
  const std::pair<const char*, int> vectors[] = {{"C~", 6}, {"Ch", 3}, {"Cl", 4}};
  for (const auto& [line, edges] : vectors) {
    ++out.cases;
    const Graph g = parse_graph6(line);
    if (g.edge_count() != edges || emit_graph6(g) != line)
      out.fail(std::string("hand vector failed: ") + line);
  }
  if (parse_graph6("C~") != Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 2}, {1, 3}, {2, 3}}))
    out.fail("C~ must decode to K4");
  if (parse_graph6("Ch") != path(4)) out.fail("Ch must decode to P4");
  if (parse_graph6("Cl") != cycle(4)) out.fail("Cl must decode to C4");
  const double ps[] = {0.05, 0.2, 0.5, 0.7, 0.95};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    ++out.cases;
    const Graph g = random_graph(static_cast<int>(i % 41), ps[i % 5], 0x66000 + i);
    const std::string line = emit_graph6(g);
    if (parse_graph6(line) != g || emit_graph6(parse_graph6(line)) != line) {
      out.fail("round trip failed at seed " + std::to_string(i));
      return out;
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "EDS/MWDS/square-MWIS three-way equivalence (all labeled n<=6 + 2000 random n<=20)",
       criterion1_equivalence},
      {2, "decider agreement with verified witnesses (same corpora)",
       criterion2_decider_agreement},
      {3, "theorem 1 & 2 zero violations (exhaustive n<=7 + >=10000 repaired members)",
       criterion3_zero_violations},
      {4, "square matches the distance definition (exhaustive n<=6 + 1000 random n<=40)",
       criterion4_square_correctness},
      {5, "pattern detector complete vs all-injective-maps oracle (all n<=7)",
       criterion5_detector_completeness},
      {6, "MWIS optimal weight matches oracle (exhaustive n<=6 + 2000 random n<=16)",
       criterion6_mwis_optimality},
      {7, "golden micro-cases (P4, C4, K1, P5, banner)", criterion7_golden_cases},
      {8, "graph6 round-trip bit-exactness (3 vectors + 1000 random n<=40)",
       criterion8_graph6_roundtrip},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome outcome = entry.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s: %llu checks in %.1fs%s%s\n",
                outcome.pass ? "PASS" : "FAIL", entry.id, entry.label,
                static_cast<unsigned long long>(outcome.cases), secs,
                outcome.note.empty() ? "" : ": ", outcome.note.c_str());
    std::fflush(stdout);
  }
  return failures;
}
