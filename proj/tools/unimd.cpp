#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "unimd/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

unimd::Graph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  unimd::Graph g = unimd::parse_edge_list(in);
  unimd::validate_unicyclic(g);
  return g;
}

unimd::VertexSet parse_set(const std::string& text) {
  unimd::VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad vertex id in --set: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--set is empty");
  return out;
}

// Parameters of the form key=value; bare values are returned under the empty key.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& params) {
  std::map<std::string, std::string> out;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      out[""] = p;
    else
      out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing parameter " + (key.empty() ? "size" : key));
  std::size_t used = 0;
  long long v = std::stoll(it->second, &used);
  if (used != it->second.size()) throw std::invalid_argument("bad integer '" + it->second + "'");
  return static_cast<int>(v);
}

unimd::Graph generate(const std::string& family, const std::vector<std::string>& params) {
  auto kv = parse_params(params);
  if (family == "cycle") return unimd::cycle_graph(param_int(kv, kv.count("n") ? "n" : ""));
  if (family == "corona") return unimd::corona(param_int(kv, kv.count("n") ? "n" : ""));
  if (family == "random")
    return unimd::random_unicyclic(param_int(kv, "n"), param_int(kv, "g"),
                                   static_cast<std::uint64_t>(std::stoull(kv.count("seed") ? kv["seed"] : "0")));
  if (family == "fixture") {
    if (!kv.count("")) throw std::invalid_argument("fixture needs a name");
    return unimd::fixture(kv[""]);
  }
  throw std::invalid_argument("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex and edge metric dimension of unicyclic graphs"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Compute dim and edim with generators and witnesses");
  std::string analyze_path;
  bool as_json = false, as_text = false, no_timing = false;
  analyze->add_option("file", analyze_path, "Edge-list file")->required();
  auto* json_flag = analyze->add_flag("--json", as_json, "JSON output (default)");
  analyze->add_flag("--text", as_text, "Human-readable output")->excludes(json_flag);
  analyze->add_flag("--no-timing", no_timing, "Omit the timing field");

  auto* verify = app.add_subcommand("verify", "Check whether a landmark set is a metric generator");
  std::string verify_path, set_text, mode = "vertex";
  verify->add_option("file", verify_path, "Edge-list file")->required();
  verify->add_option("--set", set_text, "Comma-separated vertex ids")->required();
  verify->add_option("--mode", mode, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));

  auto* compare = app.add_subcommand("compare", "Compare structural and brute-force results over all graphs");
  int max_n = 0, jobs = 1;
  compare->add_option("--max-n", max_n, "Largest order to enumerate")->required();
  compare->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a graph from a named family");
  std::string family, out_path;
  std::vector<std::string> params;
  gen->add_option("family", family, "cycle, corona, random or fixture")->required();
  gen->add_option("params", params, "e.g. 7, n=9 g=5 seed=7, TWINLEAF6");
  gen->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) {
      auto report = unimd::build_report(load(analyze_path), !no_timing);
      if (as_text)
        std::cout << unimd::to_text(report);
      else
        std::cout << nlohmann::json(report).dump(2) << "\n";
      return kOk;
    }
    if (*verify) {
      auto graph = load(verify_path);
      auto result = unimd::verify_set(graph, parse_set(set_text),
                                      mode == "edge" ? unimd::Metric::Edge : unimd::Metric::Vertex);
      std::cout << unimd::to_text(result) << "\n";
      return result.generator ? kOk : kFailure;
    }
    if (*compare) {
      if (max_n < 3 || max_n > unimd::kMaxEnumerationOrder)
        throw std::invalid_argument("bound exceeded: --max-n must be between 3 and " +
                                    std::to_string(unimd::kMaxEnumerationOrder));
      auto summary = unimd::compare_corpus(max_n, jobs);
      std::map<int, std::array<int, 3>> per_order;  // graphs, mismatches, parity violations
      for (const auto& row : summary.rows) {
        auto& cell = per_order[row.n];
        cell[0] += 1;
        cell[1] += row.match() ? 0 : 1;
        cell[2] += row.parity_ok ? 0 : 1;
      }
      std::cout << "  n  graphs  mismatches  parity_violations\n";
      for (const auto& [n, cell] : per_order)
        std::printf("%3d  %6d  %10d  %17d\n", n, cell[0], cell[1], cell[2]);
      std::cout << "graphs: " << summary.rows.size() << "\n"
                << "mismatches: " << summary.mismatches << "\n"
                << "parity violations: " << summary.parity_violations << "\n"
                << "difference -1: " << summary.difference_counts[0] << ", 0: " << summary.difference_counts[1]
                << ", +1: " << summary.difference_counts[2] << "\n";
      return summary.mismatches == 0 && summary.parity_violations == 0 ? kOk : kFailure;
    }
    if (*gen) {
      auto graph = generate(family, params);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      out << unimd::to_edge_list(graph);
      return kOk;
    }
  } catch (const unimd::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: value out of range\n";
    return kInvalid;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
