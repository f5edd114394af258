#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "unimd/unimd.hpp"

namespace unimd::testing {

/// Floyd-Warshall on the adjacency relation.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Vertices on some cycle: those whose removal of an incident edge keeps both ends connected.
inline std::set<Vertex> cycle_vertices_by_edge_removal(const Graph& g) {
  std::set<Vertex> on;
  for (const Edge& cut : g.edges()) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{cut.u};
    seen[cut.u] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (Edge(x, y) == cut || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    if (seen[cut.v]) {
      on.insert(cut.u);
      on.insert(cut.v);
    }
  }
  return on;
}

struct StructureCounts {
  int L = 0;
  int b = 0;
  std::vector<int> branch_active;  // original cycle indices
};

/**
 * Recomputes L and b straight from the definitions: a thread at v is a
 * maximal path starting at a neighbour of v that only visits degree-2
 * vertices and ends in a leaf, never returning to v.
 */
inline StructureCounts structure_by_definition(const Graph& g) {
  const std::set<Vertex> on_cycle = cycle_vertices_by_edge_removal(g);
  StructureCounts out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    int threads = 0;
    for (Vertex start : g.neighbors(v)) {
      Vertex prev = v, cur = start;
      bool ok = true;
      while (g.degree(cur) != 1) {
        if (g.degree(cur) != 2) {
          ok = false;
          break;
        }
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      threads += ok ? 1 : 0;
    }
    if (threads > 1) out.L += threads - 1;
  }
  // Tree of a cycle vertex: reachable without using cycle-cycle edges.
  const CycleInfo info = validate_unicyclic(g);
  for (int i = 0; i < info.length(); ++i) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{info.cycle[i]};
    seen[info.cycle[i]] = 1;
    bool active = false;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      const bool cyc = on_cycle.count(x) > 0;
      if ((cyc && g.degree(x) >= 4) || (!cyc && g.degree(x) >= 3)) active = true;
      for (Vertex y : g.neighbors(x))
        if (!seen[y] && !(cyc && on_cycle.count(y))) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (active) out.branch_active.push_back(i);
  }
  out.b = static_cast<int>(out.branch_active.size());
  return out;
}

/// Minimum adjacency bit string over all vertex permutations.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s(static_cast<std::size_t>(n) * n, '0');
    for (const Edge& e : g.edges()) {
      s[perm[e.u] * n + perm[e.v]] = '1';
      s[perm[e.v] * n + perm[e.u]] = '1';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of connected unicyclic graphs on n labelled vertices, by exhaustive edge subsets.
inline std::set<std::string> labelled_unicyclic_classes(int n) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::set<std::string> classes;
  const int m = static_cast<int>(all.size());
  for_each_combination(m, n, [&](const std::vector<int>& combo) {
    std::vector<Edge> edges;
    for (int c : combo) edges.push_back(all[c]);
    try {
      Graph g(n, std::move(edges));
      classes.insert(brute_canonical(g));
    } catch (const GraphError&) {
    }
    return false;
  });
  return classes;
}

/// All vertex subsets of the minimal size that are biactive and branch-resolving.
inline std::vector<VertexSet> minimal_biactive_branch_resolving_sets(const UnicyclicDecomposition& d) {
  const int m = d.L + std::max(0, 2 - d.b);
  std::vector<VertexSet> out;
  for_each_combination(d.order(), m, [&](const std::vector<int>& combo) {
    VertexSet s(combo.begin(), combo.end());
    if (is_biactive(d, s) && is_branch_resolving(d, s)) out.push_back(s);
    return false;
  });
  return out;
}

/// Status computed by scanning every minimal biactive branch-resolving subset.
inline Status scan_status(const UnicyclicDecomposition& d, Metric metric) {
  for (const VertexSet& s : minimal_biactive_branch_resolving_sets(d)) {
    auto r = analyze_configurations(build_context(d, s));
    if (!(metric == Metric::Vertex ? r.blocks_vertex() : r.blocks_edge())) return Status::Negative;
  }
  return Status::Positive;
}

inline std::vector<Graph> small_corpus(int max_n) { return enumerate_unicyclic(max_n); }

}  // namespace unimd::testing
