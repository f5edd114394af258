#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "unimd/unimd.hpp"

namespace unimd {

struct WitnessBlock {
  VertexSet set;                 // the analysed smallest biactive branch-resolving set
  int labelling_start = 0;       // original index of canonical v_0
  int labelling_direction = 1;
  int k = 0;
  std::vector<std::string> configurations;
  nlohmann::json pair;           // [x, y] or [[u, v], [u', v']]

  bool operator==(const WitnessBlock&) const = default;
};

struct DimensionBlock {
  int value = 0;
  int delta = 0;
  std::string status;
  VertexSet generator;
  std::optional<WitnessBlock> witness;

  bool operator==(const DimensionBlock&) const = default;
};

struct AnalysisReport {
  int n = 0, m = 0, g = 0, L = 0, b = 0;
  std::vector<int> branch_active;
  std::vector<Vertex> cycle;
  DimensionBlock dim;
  DimensionBlock edim;
  int difference = 0;
  std::optional<double> timing_ms;

  bool operator==(const AnalysisReport&) const = default;
};

inline void to_json(nlohmann::json& j, const WitnessBlock& w) {
  j = nlohmann::json{{"set", w.set},
                     {"labelling", {{"start", w.labelling_start}, {"direction", w.labelling_direction}}},
                     {"k", w.k},
                     {"configurations", w.configurations},
                     {"pair", w.pair}};
}

inline void from_json(const nlohmann::json& j, WitnessBlock& w) {
  j.at("set").get_to(w.set);
  j.at("labelling").at("start").get_to(w.labelling_start);
  j.at("labelling").at("direction").get_to(w.labelling_direction);
  j.at("k").get_to(w.k);
  j.at("configurations").get_to(w.configurations);
  w.pair = j.at("pair");
}

inline void to_json(nlohmann::json& j, const DimensionBlock& d) {
  j = nlohmann::json{{"value", d.value}, {"delta", d.delta}, {"status", d.status}, {"generator", d.generator}};
  j["witness"] = d.witness ? nlohmann::json(*d.witness) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, DimensionBlock& d) {
  j.at("value").get_to(d.value);
  j.at("delta").get_to(d.delta);
  j.at("status").get_to(d.status);
  j.at("generator").get_to(d.generator);
  if (j.at("witness").is_null())
    d.witness.reset();
  else
    d.witness = j.at("witness").get<WitnessBlock>();
}

inline void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"m", r.m},
                     {"g", r.g},
                     {"L", r.L},
                     {"b", r.b},
                     {"branch_active", r.branch_active},
                     {"cycle", r.cycle},
                     {"dim", r.dim},
                     {"edim", r.edim},
                     {"difference", r.difference}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

inline void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("g").get_to(r.g);
  j.at("L").get_to(r.L);
  j.at("b").get_to(r.b);
  j.at("branch_active").get_to(r.branch_active);
  j.at("cycle").get_to(r.cycle);
  j.at("dim").get_to(r.dim);
  j.at("edim").get_to(r.edim);
  j.at("difference").get_to(r.difference);
  if (j.contains("timing_ms"))
    r.timing_ms = j.at("timing_ms").get<double>();
  else
    r.timing_ms.reset();
}

namespace detail {

inline nlohmann::json pair_json(const std::pair<Vertex, Vertex>& p) { return {p.first, p.second}; }
inline nlohmann::json pair_json(const std::pair<Edge, Edge>& p) {
  return {{p.first.u, p.first.v}, {p.second.u, p.second.v}};
}

inline DimensionBlock dimension_block(const UnicyclicDecomposition& d, const DimensionValue& v, Metric metric) {
  DimensionBlock block;
  block.value = v.value;
  block.delta = v.delta;
  block.status = to_string(v.status.status);
  block.generator = v.generator;
  if (v.status.status == Status::Positive) {
    const LandmarkContext ctx = build_context(d, v.status.base_set);
    const ConfigurationReport& rep = v.status.base_report;
    WitnessBlock w;
    w.set = v.status.base_set;
    w.labelling_start = ctx.labelling.start;
    w.labelling_direction = ctx.labelling.direction;
    w.k = ctx.k;
    const std::vector<Config> which = metric == Metric::Vertex ? std::vector{Config::A, Config::B, Config::C}
                                                               : std::vector{Config::A, Config::D, Config::E};
    for (char c : rep.names(which)) w.configurations.emplace_back(1, c);
    w.pair = metric == Metric::Vertex ? pair_json(*rep.vertex_witness) : pair_json(*rep.edge_witness);
    block.witness = std::move(w);
  }
  return block;
}

}  // namespace detail

inline AnalysisReport build_report(const Graph& graph, bool with_timing = true) {
  const auto t0 = std::chrono::steady_clock::now();
  const UnicyclicDecomposition d = decompose(graph);
  const DimensionResult result = analyze(d);
  AnalysisReport r;
  r.n = graph.order();
  r.m = graph.size();
  r.g = d.g();
  r.L = d.L;
  r.b = d.b;
  r.branch_active = d.branch_active;
  r.cycle = d.cycle_info.cycle;
  r.dim = detail::dimension_block(d, result.dim, Metric::Vertex);
  r.edim = detail::dimension_block(d, result.edim, Metric::Edge);
  r.difference = result.difference;
  if (with_timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace detail {

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

inline void text_block(std::ostream& out, const char* name, const DimensionBlock& block) {
  out << name << " = " << block.value << " (delta " << block.delta << ", " << block.status << ")\n";
  out << "  generator: {" << join(block.generator) << "}\n";
  if (block.witness) {
    const auto& w = *block.witness;
    out << "  base set {" << join(w.set) << "}: canonical v_0 = original index " << w.labelling_start
        << ", direction " << (w.labelling_direction > 0 ? "+1" : "-1") << ", k = " << w.k << "\n";
    out << "  configurations:";
    for (const auto& c : w.configurations) out << ' ' << c;
    out << "; undistinguished pair " << w.pair.dump() << "\n";
  }
}

}  // namespace detail

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", m = " << r.m << ", g = " << r.g << "\n";
  out << "cycle: " << detail::join(r.cycle, " ") << "\n";
  out << "L = " << r.L << ", b = " << r.b << ", branch-active positions: {" << detail::join(r.branch_active) << "}\n";
  detail::text_block(out, "dim", r.dim);
  detail::text_block(out, "edim", r.edim);
  out << "dim - edim = " << r.difference << "\n";
  if (r.timing_ms) out << "time: " << *r.timing_ms << " ms\n";
  return out.str();
}

struct VerifyResult {
  bool generator = false;
  std::string pair;                  // printable failing pair, empty when generator
  std::string configurations;        // e.g. "C", empty when none or not applicable
  bool biactive_branch_resolving = false;
};

/**
 * Checks a landmark set. When it fails and is a biactive branch-resolving
 * set, the reported pair is the configuration witness; otherwise it is the
 * oracle's lexicographically smallest failing pair.
 */
inline VerifyResult verify_set(const Graph& graph, const VertexSet& set, Metric metric) {
  for (Vertex x : set)
    if (x < 0 || x >= graph.order()) throw GraphError(GraphErrorKind::UnknownVertex, std::to_string(x));
  if (set.empty()) throw std::invalid_argument("empty landmark set");
  const UnicyclicDecomposition d = decompose(graph);
  const VertexSet s = normalized(set);
  VerifyResult out;
  out.biactive_branch_resolving = is_biactive(d, s) && is_branch_resolving(d, s);
  std::optional<ConfigurationReport> rep;
  if (out.biactive_branch_resolving) rep = analyze_configurations(build_context(d, s));
  auto fmt_edge = [](const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; };
  if (metric == Metric::Vertex) {
    auto check = is_vertex_generator(d.distances, s);
    out.generator = check.ok;
    if (rep) out.configurations = rep->names({Config::A, Config::B, Config::C});
    if (!check.ok) {
      auto p = rep && rep->vertex_witness ? *rep->vertex_witness : *check.failing_pair;
      out.pair = "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
    }
  } else {
    auto check = is_edge_generator(d.distances, graph.edges(), s);
    out.generator = check.ok;
    if (rep) out.configurations = rep->names({Config::A, Config::D, Config::E});
    if (!check.ok) {
      auto p = rep && rep->edge_witness ? *rep->edge_witness : *check.failing_pair;
      out.pair = "(" + fmt_edge(p.first) + ", " + fmt_edge(p.second) + ")";
    }
  }
  return out;
}

inline std::string to_text(const VerifyResult& v) {
  if (v.generator) return "generator";
  std::string out = "not a generator; pair " + v.pair;
  if (!v.configurations.empty()) {
    out += v.configurations.size() == 1 ? "; configuration " : "; configurations ";
    for (std::size_t i = 0; i < v.configurations.size(); ++i)
      out += (i ? ", " : "") + std::string(1, v.configurations[i]);
  } else if (!v.biactive_branch_resolving) {
    out += "; not a biactive branch-resolving set";
  }
  return out;
}

struct CompareRow {
  int n = 0, g = 0;
  int dim = 0, edim = 0;
  int oracle_dim = 0, oracle_edim = 0;
  int difference = 0;
  bool parity_ok = true;
  bool match() const { return dim == oracle_dim && edim == oracle_edim && difference == oracle_dim - oracle_edim; }
};

struct CompareSummary {
  std::vector<CompareRow> rows;  // enumeration order
  int mismatches = 0;
  int parity_violations = 0;
  int difference_counts[3] = {0, 0, 0};  // -1, 0, +1
};

inline CompareRow compare_graph(const Graph& graph) {
  const UnicyclicDecomposition d = decompose(graph);
  const DimensionResult r = analyze(d);
  CompareRow row;
  row.n = graph.order();
  row.g = d.g();
  row.dim = r.dim.value;
  row.edim = r.edim.value;
  row.difference = r.difference;
  row.oracle_dim = brute_force_dim(graph).value;
  row.oracle_edim = brute_force_edim(graph).value;
  row.parity_ok = row.g % 2 == 1 ? row.oracle_dim <= row.oracle_edim : row.oracle_dim >= row.oracle_edim;
  return row;
}

/// Structural versus brute-force results over the exhaustive corpus; rows keep enumeration order.
inline CompareSummary compare_corpus(int max_n, int jobs = 1) {
  const std::vector<Graph> graphs = enumerate_unicyclic(max_n);
  CompareSummary summary;
  summary.rows.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) summary.rows[i] = compare_graph(graphs[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& row : summary.rows) {
    summary.mismatches += row.match() ? 0 : 1;
    summary.parity_violations += row.parity_ok ? 0 : 1;
    summary.difference_counts[row.difference + 1] += 1;
  }
  return summary;
}

}  // namespace unimd
