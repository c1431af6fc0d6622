#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edskit/eds.hpp"
#include "edskit/graph.hpp"
#include "edskit/graph6.hpp"
#include "edskit/harness.hpp"
#include "edskit/patterns.hpp"

namespace edskit::cli {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCapacity = 2;
constexpr int kNoEds = 3;
constexpr int kViolations = 4;
constexpr int kMismatch = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedGraph {
  Graph g;
  bool edgelist;
};

LoadedGraph load_graph(const std::string& literal, const std::string& path) {
  if (!literal.empty() && !path.empty())
    throw std::invalid_argument("give a graph literal or --input, not both");
  if (literal.empty() && path.empty())
    throw std::invalid_argument("no graph given");
  std::string text = literal.empty() ? read_file(path) : literal;
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos)
    throw std::invalid_argument("empty graph document");
  // Edge lists start with a decimal vertex count; graph6 bytes sit in
  // 63..126, so the first character separates the two formats.
  if (std::isdigit(static_cast<unsigned char>(text[start])))
    return {parse_edge_list(text), true};
  std::size_t end = text.find_first_of("\r\n", start);
  if (end == std::string::npos) end = text.size();
  return {parse_graph6(std::string_view(text).substr(start, end - start)), false};
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) names.push_back(item);
  return names;
}

std::string_view status_name(TheoremVerdict::Status s) {
  switch (s) {
    case TheoremVerdict::Status::holds: return "holds";
    case TheoremVerdict::Status::not_in_class: return "not-in-class";
    case TheoremVerdict::Status::no_eds: return "no-eds";
    case TheoremVerdict::Status::violation: return "violation";
  }
  return "unknown";
}

std::string embedding_csv(const Embedding& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

int run_check(const LoadedGraph& in, std::ostream& out) {
  const ClassReport report = class_report(in.g);
  out << "n=" << in.g.vertex_count() << '\n';
  for (const auto& [name, free] : report.free)
    out << name << "-free=" << (free ? "true" : "false") << '\n';
  out << "(P6,banner)-free=" << (report.p6_banner_free ? "true" : "false")
      << '\n';
  out << "SUMMARY n=" << in.g.vertex_count()
      << " p6_banner_free=" << (report.p6_banner_free ? "true" : "false")
      << '\n';
  return kOk;
}

int run_square(const LoadedGraph& in, std::ostream& out) {
  const Graph sq = square(in.g);
  if (in.edgelist)
    out << emit_edge_list(sq);
  else
    out << emit_graph6(sq) << '\n';
  return kOk;
}

int run_solve(const LoadedGraph& in, const std::string& method,
              std::ostream& out) {
  out << "n=" << in.g.vertex_count() << '\n';
  std::optional<EdsResult> by_square, by_brute;
  if (method == "square" || method == "both")
    by_square = eds_via_square(in.g);
  if (method == "brute" || method == "both") by_brute = eds_brute_force(in.g);
  for (const auto* r : {&by_square, &by_brute}) {
    if (!r->has_value()) continue;
    const EdsResult& res = **r;
    out << "method=" << res.method
        << " outcome=" << (res.exists() ? "exists" : "not-exists");
    if (res.exists()) out << " set=" << res.set->to_string();
    out << '\n';
  }
  if (by_square && by_brute) {
    const bool agree = by_square->exists() == by_brute->exists();
    out << "agree=" << (agree ? "true" : "false") << '\n';
    if (!agree) {
      out << "SUMMARY ok=false mismatch=true\n";
      return kMismatch;
    }
  }
  const bool exists = by_square ? by_square->exists() : by_brute->exists();
  out << "SUMMARY exists=" << (exists ? "true" : "false") << '\n';
  return exists ? kOk : kNoEds;
}

int run_verify_single(const LoadedGraph& in, std::ostream& out) {
  if (in.g.vertex_count() <= 62)  // 63- and 64-vertex graphs have no graph6 form
    out << "graph6=" << emit_graph6(in.g) << '\n';
  out << "n=" << in.g.vertex_count() << '\n';
  int violations = 0;
  for (Theorem t : {Theorem::T1, Theorem::T2}) {
    const TheoremVerdict v = verify_theorem(in.g, t);
    out << theorem_name(t) << "=" << status_name(v.status);
    if (v.witness) out << " witness=" << embedding_csv(*v.witness);
    out << '\n';
    if (v.status == TheoremVerdict::Status::violation) ++violations;
  }
  out << "SUMMARY graphs=1 violations=" << violations
      << " ok=" << (violations == 0 ? "true" : "false") << '\n';
  return violations == 0 ? kOk : kViolations;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficient dominating sets via the square-graph reduction"};
  app.require_subcommand(1);

  std::string graph_literal, input_path;
  std::string method = "square";
  std::string forbid_csv;
  int sample_n = 0, exhaustive_n = -1, threads = 1;
  double sample_p = 0.0;
  std::uint64_t seed = 0, count = 0, budget = 0;
  bool require_eds = false;

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_literal, "graph6 line");
    cmd->add_option("--input", input_path, "file holding a graph6 line or an edge list");
  };

  CLI::App* check = app.add_subcommand("check", "Forbidden-pattern membership report");
  add_graph_options(check);

  CLI::App* square_cmd = app.add_subcommand("square", "Print the square of the graph");
  add_graph_options(square_cmd);

  CLI::App* solve = app.add_subcommand("solve", "Decide efficient-dominating-set existence");
  add_graph_options(solve);
  solve->add_option("--method", method, "square|brute|both")
      ->check(CLI::IsMember({"square", "brute", "both"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Verify the square-structure theorems");
  add_graph_options(verify);
  verify->add_option("--exhaustive", exhaustive_n, "all labeled graphs with 0..n vertices");
  verify->add_option("--n", sample_n, "sample vertex count");
  verify->add_option("--p", sample_p, "sample edge probability");
  verify->add_option("--seed", seed, "sample seed");
  verify->add_option("--count", count, "number of samples");
  verify->add_option("--forbid", forbid_csv, "comma-separated pattern names (default P6,banner)");
  verify->add_option("--threads", threads, "worker threads");

  CLI::App* sample = app.add_subcommand("sample", "Emit seeded sample graphs as graph6 lines");
  sample->add_option("--n", sample_n, "vertex count")->required();
  sample->add_option("--p", sample_p, "edge probability")->required();
  sample->add_option("--seed", seed, "seed")->required();
  sample->add_option("--count", count, "number of graphs")->required();
  sample->add_option("--forbid", forbid_csv, "repair samples to be free of these patterns");
  sample->add_flag("--require-eds", require_eds, "only emit graphs with an EDS");

  CLI::App* search = app.add_subcommand("search", "Sample class members and search for counterexamples");
  search->add_option("--n", sample_n, "vertex count")->required();
  search->add_option("--p", sample_p, "edge probability")->required();
  search->add_option("--seed", seed, "seed")->required();
  search->add_option("--budget", budget, "number of samples")->required();
  search->add_option("--forbid", forbid_csv, "comma-separated pattern names (default P6,banner)");
  search->add_flag("--require-eds", require_eds, "skip sampled graphs without an EDS");
  search->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (threads < 1) throw std::invalid_argument("--threads must be positive");

    if (check->parsed()) return run_check(load_graph(graph_literal, input_path), out);
    if (square_cmd->parsed())
      return run_square(load_graph(graph_literal, input_path), out);
    if (solve->parsed())
      return run_solve(load_graph(graph_literal, input_path), method, out);

    if (verify->parsed()) {
      const bool has_graph = !graph_literal.empty() || !input_path.empty();
      const bool has_exhaustive = exhaustive_n >= 0;
      const bool has_sample = verify->count("--n") > 0;
      if (has_graph + has_exhaustive + has_sample != 1)
        throw std::invalid_argument(
            "verify needs exactly one of: a graph, --exhaustive, or --n/--p/--seed/--count");
      if (has_graph) return run_verify_single(load_graph(graph_literal, input_path), out);
      VerificationReport report;
      if (has_exhaustive) {
        report = verify_exhaustive(exhaustive_n, threads, &out);
      } else {
        if (verify->count("--seed") == 0)
          throw std::invalid_argument("sampled verify requires an explicit --seed");
        SampleSpec spec{sample_n, sample_p, seed,
                        split_names(forbid_csv.empty() ? "P6,banner" : forbid_csv),
                        false};
        report = search_counterexamples(spec, count, threads, &out);
      }
      report.write(out);
      return report.ok() ? kOk : kViolations;
    }

    if (sample->parsed()) {
      SampleSpec spec{sample_n, sample_p, seed, split_names(forbid_csv),
                      require_eds};
      for (const Graph& g : sample_graphs(spec, count))
        out << emit_graph6(g) << '\n';
      return kOk;
    }

    if (search->parsed()) {
      SampleSpec spec{sample_n, sample_p, seed,
                      split_names(forbid_csv.empty() ? "P6,banner" : forbid_csv),
                      require_eds};
      const VerificationReport report =
          search_counterexamples(spec, budget, threads, &out);
      report.write(out);
      return report.ok() ? kOk : kViolations;
    }
  } catch (const std::length_error& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "decider mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace edskit::cli
