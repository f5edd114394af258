#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimd/graph.hpp"

namespace unimd {

inline constexpr int kMaxEnumerationOrder = 11;

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

/// C_n with a pendant leaf n+i on every cycle vertex i.
inline Graph corona(int n) {
  if (n < 3) throw std::invalid_argument("corona needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n, std::move(edges));
}

namespace detail {

inline Graph cycle_plus(int g, std::initializer_list<std::pair<int, int>> extra) {
  std::vector<Edge> edges;
  int n = g;
  for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
  for (auto [a, b] : extra) {
    edges.emplace_back(a, b);
    n = std::max({n, a + 1, b + 1});
  }
  return Graph(n, std::move(edges));
}

}  // namespace detail

/// Named graphs used throughout the tests and the CLI.
inline std::map<std::string, Graph> fixtures() {
  std::map<std::string, Graph> f;
  f.emplace("TWINLEAF6", detail::cycle_plus(6, {{0, 6}, {0, 7}, {3, 8}, {3, 9}}));
  f.emplace("INTBR6", detail::cycle_plus(6, {{0, 6}, {6, 7}, {6, 8}, {2, 9}, {9, 10}, {9, 11}}));
  f.emplace("C4LL", detail::cycle_plus(4, {{0, 4}, {2, 5}}));
  f.emplace("PENT3", detail::cycle_plus(5, {{0, 5}, {1, 6}, {2, 7}}));
  for (int n : {6, 7}) f.emplace("CORONA" + std::to_string(n), corona(n));
  for (int n : {4, 5, 6, 7, 8}) f.emplace("CYC" + std::to_string(n), cycle_graph(n));
  return f;
}

inline Graph fixture(const std::string& name) {
  auto all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown fixture: " + name);
  return it->second;
}

/**
 * Cycle 0..g-1, then every further vertex attaches to a uniformly chosen
 * earlier vertex. Uses mt19937_64 with plain modulo reduction so the output
 * does not depend on the standard library's distributions.
 */
inline Graph random_unicyclic(int n, int g, std::uint64_t seed) {
  if (g < 3 || n < g) throw std::invalid_argument("random_unicyclic needs 3 <= g <= n");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
  for (int v = g; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)));
  return Graph(n, std::move(edges));
}

struct CanonicalForm {
  std::string code;
  Graph graph;  // relabelled representative: cycle first, then trees in code order
};

/**
 * Canonical form of a unicyclic graph: each tree hanging off the cycle gets
 * its rooted AHU code, and the cyclic sequence of codes is minimised over all
 * rotations and both directions.
 */
inline CanonicalForm canonical_form(const Graph& graph) {
  const CycleInfo info = validate_unicyclic(graph);
  const int n = graph.order();
  const int g = info.length();

  std::vector<std::string> code(n);
  std::vector<std::vector<Vertex>> children(n);
  std::function<void(Vertex, Vertex)> encode = [&](Vertex x, Vertex parent) {
    std::vector<std::pair<std::string, Vertex>> kids;
    for (Vertex y : graph.neighbors(x))
      if (y != parent && !info.on_cycle[y]) {
        encode(y, x);
        kids.emplace_back(code[y], y);
      }
    std::sort(kids.begin(), kids.end());
    code[x] = "(";
    for (auto& [c, y] : kids) {
      code[x] += c;
      children[x].push_back(y);
    }
    code[x] += ")";
  };
  for (Vertex c : info.cycle) encode(c, -1);

  std::vector<std::string> best;
  int best_start = 0, best_dir = 1;
  for (int start = 0; start < g; ++start)
    for (int dir : {1, -1}) {
      std::vector<std::string> seq(g);
      for (int i = 0; i < g; ++i) seq[i] = code[info.at(start + dir * i)];
      if (best.empty() || seq < best) {
        best = std::move(seq);
        best_start = start;
        best_dir = dir;
      }
    }

  std::vector<int> label(n, -1);
  for (int i = 0; i < g; ++i) label[info.at(best_start + best_dir * i)] = i;
  int next = g;
  std::function<void(Vertex)> number = [&](Vertex x) {
    for (Vertex y : children[x]) {
      label[y] = next++;
      number(y);
    }
  };
  for (int i = 0; i < g; ++i) number(info.at(best_start + best_dir * i));

  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) edges.emplace_back(label[e.u], label[e.v]);

  std::string joined = std::to_string(g) + ":";
  for (const auto& s : best) joined += s;
  return {joined, Graph(n, std::move(edges))};
}

namespace detail {

using ClassMap = std::map<std::string, Graph>;

inline void check_order_bound(int n) {
  if (n < 3 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration bound must be in [3, " + std::to_string(kMaxEnumerationOrder) + "]");
}

// Every non-cycle unicyclic graph has a leaf whose removal leaves a smaller one.
inline ClassMap grow(const ClassMap& level, int order) {
  ClassMap grown;
  auto c = canonical_form(cycle_graph(order));
  grown.emplace(c.code, c.graph);
  for (const auto& [code, graph] : level)
    for (Vertex v = 0; v < graph.order(); ++v) {
      auto edges = graph.edges();
      edges.emplace_back(v, order - 1);
      auto cf = canonical_form(Graph(order, std::move(edges)));
      grown.emplace(std::move(cf.code), std::move(cf.graph));
    }
  return grown;
}

}  // namespace detail

/// All classes with 3..max_n vertices, ordered by vertex count then canonical code.
inline std::vector<Graph> enumerate_unicyclic(int max_n) {
  detail::check_order_bound(max_n);
  std::vector<Graph> out;
  detail::ClassMap level;
  for (int n = 3; n <= max_n; ++n) {
    level = detail::grow(level, n);
    for (const auto& [code, graph] : level) out.push_back(graph);
  }
  return out;
}

/// One representative per isomorphism class of connected unicyclic graphs on exactly n vertices.
inline std::vector<Graph> enumerate_unicyclic_of_order(int n) {
  detail::check_order_bound(n);
  auto all = enumerate_unicyclic(n);
  std::erase_if(all, [n](const Graph& g) { return g.order() != n; });
  return all;
}

}  // namespace unimd
