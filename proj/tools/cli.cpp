#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "aec/io.hpp"
#include "aec/oracle.hpp"
#include "aec/solver.hpp"
#include "json.hpp"

namespace aec::cli {

namespace {

using nlohmann::json;

json trace_to_json(const ExtensionTrace& t) {
  json events = json::array();
  for (const auto& ev : t.events) {
    json changes = json::array();
    for (const auto& [e, col] : ev.changes) changes.push_back({e, col});
    events.push_back({{"label", ev.label},
                      {"action", to_string(ev.action)},
                      {"changes", changes},
                      {"pre_checked", ev.pre_checked},
                      {"post_checked", ev.post_checked}});
  }
  return {{"edge", t.edge}, {"final_label", t.final_label}, {"events", events}};
}

json stats_to_json(const SolveStats& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"delta", s.delta},
          {"mode", s.mode},
          {"colors_used", s.colors_used},
          {"fallback_count", s.fallback_count},
          {"case_histogram", s.case_histogram},
          {"fallback_by_case", s.fallback_by_case}};
}

SolveMode parse_mode(const std::string& mode) {
  if (mode == "auto") return SolveMode::Auto;
  if (mode == "theorem") return SolveMode::Theorem;
  if (mode == "corollary") return SolveMode::Corollary;
  throw Error("unknown mode: " + mode + " (expected auto|theorem|corollary)");
}

Graph instance_from_json(const json& entry) {
  std::string family = entry.at("family");
  if (family == "random") {
    Random3SparseParams p;
    p.n = entry.at("n");
    p.delta_cap = entry.value("delta_cap", 4);
    p.m_target = entry.at("m");
    p.seed = entry.at("seed");
    p.require_qualifying = entry.value("require_qualifying", true);
    return make_random_3sparse(p);
  }
  if (family == "biregular")
    return make_biregular_3_delta(entry.at("a"), entry.at("delta"));
  return make_named(family, entry.value("n", 0));
}

struct BenchRow {
  std::string family;
  int n = 0, m = 0, delta = 0;
  std::string mode;
  int colors = 0;
  bool bound_ok = false;
  bool verified = false;
  long fallbacks = 0;
  double ms = 0.0;
  std::string error;
  std::map<std::string, long> fallback_by_case;
};

}  // namespace

Random3SparseParams corpus_params(uint64_t seed) {
  Random3SparseParams p;
  p.n = 12 + static_cast<int>((seed * 7) % 49);  // 12..60
  p.delta_cap = 4 + static_cast<int>(seed % 5);  // 4..8
  int low = std::max(1, (2 * p.n) / 3);
  p.m_target = std::min(3 * low - 1, (p.n * 8) / 5);
  p.seed = seed;
  p.require_qualifying = true;
  return p;
}

int cmd_color(const ColorArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_edge_list_file(args.input);
  } catch (const Error& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kInputRejected;
  }

  SolveOptions opts;
  SolveResult result{PartialColoring(g, Palette{1})};
  try {
    opts.mode = parse_mode(args.mode);
    opts.checked = args.checked;
    opts.collect_traces = !args.trace_path.empty();
    result = acyclic_color(g, opts);
  } catch (const NotThreeSparseError& e) {
    auto [u, v] = g.endpoints(e.edge);
    err << "error: not 3-sparse: edge " << e.edge << " (" << u << "," << v
        << ") has both endpoints of degree > 3\n";
    return kInputRejected;
  } catch (const NoQualifyingEdgeError& e) {
    err << "error: no qualifying edge: " << e.what() << '\n';
    return kInputRejected;
  } catch (const SolveAbortError& e) {
    err << "error: theorem-mode abort: " << e.what() << "\n  " << e.diagnostics
        << '\n';
    return kTheoremAbort;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!args.output.empty()) {
    file_out.open(args.output);
    if (!file_out) {
      err << "error: cannot write " << args.output << '\n';
      return kInputRejected;
    }
    sink = &file_out;
  }

  if (args.format == "structured") {
    json coloring = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      coloring.push_back({{"u", u}, {"v", v}, {"color", result.coloring.color(e)}});
    }
    json record = {{"input", args.input},
                   {"mode", result.stats.mode},
                   {"delta", result.stats.delta},
                   {"colors_used", result.stats.colors_used},
                   {"verified", true},
                   {"fallback_count", result.stats.fallback_count},
                   {"palette", result.palette_size},
                   {"coloring", coloring},
                   {"stats", stats_to_json(result.stats)}};
    if (!args.trace_path.empty()) {
      json traces = json::array();
      for (const auto& t : result.traces) traces.push_back(trace_to_json(t));
      record["trace"] = traces;
    }
    *sink << record.dump(2) << '\n';
  } else {
    write_coloring(*sink, result.coloring);
  }

  if (!args.trace_path.empty()) {
    std::ofstream tf(args.trace_path);
    if (!tf) {
      err << "error: cannot write " << args.trace_path << '\n';
      return kInputRejected;
    }
    json traces = json::array();
    for (const auto& t : result.traces) traces.push_back(trace_to_json(t));
    tf << traces.dump(2) << '\n';
  }
  err << "colored " << g.edge_count() << " edges with "
      << result.stats.colors_used << " colors (mode " << result.stats.mode
      << ", delta " << result.stats.delta << ", fallbacks "
      << result.stats.fallback_count << ")\n";
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  ColoringFile file;
  try {
    g = read_edge_list_file(args.graph);
    file = read_coloring_file(args.coloring);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }

  // Properness is checked on the raw entries so improper files are reported
  // as verification failures, not input errors.
  std::vector<std::vector<std::pair<Color, EdgeId>>> at(g.vertex_count());
  for (const auto& [u, v, col] : file.entries) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
        g.edge_between(u, v) == -1) {
      err << "error: coloring references missing edge (" << u << "," << v
          << ")\n";
      return kInputRejected;
    }
    EdgeId e = g.edge_between(u, v);
    for (VertexId w : {u, v}) {
      for (const auto& [c0, e0] : at[w]) {
        if (c0 == col) {
          out << "IMPROPER vertex " << w << " color " << col << " edges " << e0
              << " and " << e << '\n';
          return kVerificationFailed;
        }
      }
      at[w].emplace_back(col, e);
    }
  }

  PartialColoring coloring = apply_coloring(g, file);
  if (auto cycle = verify_acyclic(coloring)) {
    out << "BICHROMATIC CYCLE colors " << cycle->colors.first << ' '
        << cycle->colors.second << " vertices";
    for (VertexId v : cycle->vertices) out << ' ' << v;
    out << '\n';
    return kVerificationFailed;
  }
  out << "OK proper acyclic, " << coloring.colored_count() << "/"
      << g.edge_count() << " edges colored, " << color_count(coloring)
      << " colors\n";
  return kOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_edge_list_file(args.graph);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }
  OracleLimits limits;
  limits.node_budget = args.budget;
  limits.max_edges_guard = args.max_edges;
  limits.override_guard = args.max_edges > 18;
  int kmax = args.kmax > 0 ? args.kmax : g.max_degree() + 2;
  try {
    auto result = exact_aci(g, kmax, limits);
    if (std::holds_alternative<OracleResult>(result)) {
      const auto& r = std::get<OracleResult>(result);
      out << "aci " << r.aci << "\nnodes_explored " << r.nodes_explored << '\n';
      if (args.witness) write_coloring(out, r.witness);
      return kOk;
    }
    const auto& b = std::get<OracleBounds>(result);
    err << "budget exceeded: lower bound " << b.lower << ", upper bound "
        << (b.upper > 0 ? std::to_string(b.upper) : std::string("unknown"))
        << ", nodes " << b.nodes_explored << '\n';
    return kTheoremAbort;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.manifest_out.empty()) {
      json instances = json::array();
      for (int i = 1; i <= args.corpus_count; ++i) {
        Random3SparseParams p = corpus_params(args.seed + i - 1);
        instances.push_back({{"family", "random"},
                             {"n", p.n},
                             {"delta_cap", p.delta_cap},
                             {"m", p.m_target},
                             {"seed", p.seed},
                             {"require_qualifying", p.require_qualifying}});
      }
      std::ofstream mf(args.manifest_out);
      if (!mf) throw Error("cannot write " + args.manifest_out);
      mf << json{{"instances", instances}}.dump(2) << '\n';
      err << "wrote " << args.corpus_count << " instances to "
          << args.manifest_out << '\n';
      return kOk;
    }

    Graph g;
    if (args.family == "random") {
      Random3SparseParams p;
      p.n = args.n;
      p.delta_cap = args.delta_cap;
      p.m_target = args.m;
      p.seed = args.seed;
      p.require_qualifying = args.require_qualifying;
      g = make_random_3sparse(p);
    } else if (args.family == "biregular") {
      g = make_biregular_3_delta(args.a, args.delta);
    } else {
      g = make_named(args.family, args.n);
    }
    if (!args.output.empty()) {
      std::ofstream f(args.output);
      if (!f) throw Error("cannot write " + args.output);
      write_edge_list(f, g);
    } else {
      write_edge_list(out, g);
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  json manifest;
  try {
    std::ifstream mf(args.manifest);
    if (!mf) throw Error("cannot open " + args.manifest);
    mf >> manifest;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputRejected;
  }
  const auto& instances = manifest.at("instances");
  std::vector<BenchRow> rows(instances.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= instances.size()) break;
      BenchRow& row = rows[i];
      try {
        const json& entry = instances[i];
        row.family = entry.at("family");
        Graph g = instance_from_json(entry);
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.delta = g.max_degree();
        auto start = std::chrono::steady_clock::now();
        SolveResult r = acyclic_color(g);
        row.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        row.mode = r.stats.mode;
        row.colors = r.stats.colors_used;
        row.fallbacks = r.stats.fallback_count;
        row.fallback_by_case = r.stats.fallback_by_case;
        int bound = row.delta + (r.stats.mode == "theorem" ? 1 : 2);
        row.bound_ok = row.colors <= bound;
        row.verified = !verify_proper(r.coloring).has_value() &&
                       !verify_acyclic(r.coloring).has_value();
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  int jobs = std::max(1, args.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  long failures = 0, fallback_total = 0;
  std::map<std::string, long> fallback_by_case;
  for (const auto& row : rows) {
    if (!row.error.empty() || !row.verified || !row.bound_ok) ++failures;
    fallback_total += row.fallbacks;
    for (const auto& [k, v] : row.fallback_by_case) fallback_by_case[k] += v;
  }

  if (args.format == "structured") {
    json rows_json = json::array();
    for (const auto& row : rows) {
      rows_json.push_back({{"family", row.family},
                           {"n", row.n},
                           {"m", row.m},
                           {"delta", row.delta},
                           {"mode", row.mode},
                           {"colors_used", row.colors},
                           {"bound_ok", row.bound_ok},
                           {"verified", row.verified},
                           {"fallback_count", row.fallbacks},
                           {"ms", row.ms},
                           {"error", row.error}});
    }
    out << json{{"rows", rows_json},
                {"failures", failures},
                {"fallback_total", fallback_total},
                {"fallback_by_case", fallback_by_case}}
               .dump(2)
        << '\n';
  } else {
    out << std::left << std::setw(4) << "#" << std::setw(11) << "family"
        << std::right << std::setw(5) << "n" << std::setw(6) << "m"
        << std::setw(7) << "delta" << std::setw(11) << "mode" << std::setw(8)
        << "colors" << std::setw(7) << "bound" << std::setw(10) << "verified"
        << std::setw(10) << "fallback" << std::setw(10) << "ms" << '\n';
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (!row.error.empty()) {
        out << std::left << std::setw(4) << i << "ERROR " << row.error << '\n';
        continue;
      }
      out << std::left << std::setw(4) << i << std::setw(11) << row.family
          << std::right << std::setw(5) << row.n << std::setw(6) << row.m
          << std::setw(7) << row.delta << std::setw(11) << row.mode
          << std::setw(8) << row.colors << std::setw(7)
          << (row.bound_ok ? "ok" : "FAIL") << std::setw(10)
          << (row.verified ? "yes" : "NO") << std::setw(10) << row.fallbacks
          << std::setw(10) << std::fixed << std::setprecision(2) << row.ms
          << '\n';
    }
    out << rows.size() << " instances, " << failures << " failures, "
        << fallback_total << " fallback invocations\n";
    for (const auto& [label, count] : fallback_by_case)
      out << "  fallback at " << label << ": " << count << '\n';
  }
  return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace aec::cli
