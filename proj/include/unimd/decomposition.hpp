#pragma once

#include <algorithm>
#include <vector>

#include "unimd/graph.hpp"

namespace unimd {

/// Pendant path u_1..u_k hanging at an anchor of degree >= 3; the anchor is not part of it.
struct Thread {
  Vertex anchor = -1;
  std::vector<Vertex> vertices;  // u_1 (adjacent to anchor) .. u_k (degree 1)

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex tip() const { return vertices.back(); }
  bool contains(Vertex x) const { return std::find(vertices.begin(), vertices.end(), x) != vertices.end(); }

  bool operator==(const Thread&) const = default;
};

/**
 * Structural skeleton of a unicyclic graph: the rooted trees hanging off the
 * cycle, the threads, branching vertices and the counts L and b.
 */
struct UnicyclicDecomposition {
  Graph graph;
  CycleInfo cycle_info;
  DistanceMatrix distances;
  std::vector<int> tree_of;                 // cycle index i with vertex in T_{v_i}
  std::vector<std::vector<Vertex>> trees;   // per cycle index, vertices of T_{v_i} (BFS order from v_i)
  std::vector<std::vector<Thread>> threads; // per vertex, threads anchored there (by u_1)
  std::vector<int> ell;                     // thread count for deg >= 3, else -1
  std::vector<char> branching;
  std::vector<int> branch_active;           // ascending cycle indices
  int L = 0;
  int b = 0;

  int g() const { return cycle_info.length(); }
  int order() const { return graph.order(); }
  Vertex cycle_vertex(int i) const { return cycle_info.at(i); }
  bool is_branch_active(int i) const {
    return std::binary_search(branch_active.begin(), branch_active.end(), i);
  }
};

inline UnicyclicDecomposition decompose(const Graph& graph, const CycleInfo& info) {
  UnicyclicDecomposition d{graph, info, all_pairs_distances(graph), {}, {}, {}, {}, {}, {}, 0, 0};
  const int n = graph.order();
  const int g = info.length();

  d.tree_of.assign(n, -1);
  d.trees.assign(g, {});
  for (int i = 0; i < g; ++i) {
    auto& tree = d.trees[i];
    tree.push_back(info.cycle[i]);
    d.tree_of[info.cycle[i]] = i;
    for (std::size_t head = 0; head < tree.size(); ++head)
      for (Vertex y : graph.neighbors(tree[head]))
        if (!info.on_cycle[y] && d.tree_of[y] < 0) {
          d.tree_of[y] = i;
          tree.push_back(y);
        }
  }

  d.threads.assign(n, {});
  for (Vertex tip = 0; tip < n; ++tip) {
    if (graph.degree(tip) != 1) continue;
    std::vector<Vertex> walk{tip};
    Vertex prev = tip, cur = graph.neighbors(tip).front();
    while (graph.degree(cur) == 2) {
      walk.push_back(cur);
      Vertex next = graph.neighbors(cur)[0] == prev ? graph.neighbors(cur)[1] : graph.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    std::reverse(walk.begin(), walk.end());
    d.threads[cur].push_back(Thread{cur, std::move(walk)});
  }
  for (auto& list : d.threads)
    std::sort(list.begin(), list.end(),
              [](const Thread& a, const Thread& b) { return a.vertices.front() < b.vertices.front(); });

  d.ell.assign(n, -1);
  d.branching.assign(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    const int deg = graph.degree(x);
    if (deg >= 3) {
      d.ell[x] = static_cast<int>(d.threads[x].size());
      if (d.ell[x] > 1) d.L += d.ell[x] - 1;
    }
    d.branching[x] = info.on_cycle[x] ? deg >= 4 : deg >= 3;
  }
  for (int i = 0; i < g; ++i)
    if (std::any_of(d.trees[i].begin(), d.trees[i].end(), [&](Vertex x) { return d.branching[x] != 0; }))
      d.branch_active.push_back(i);
  d.b = static_cast<int>(d.branch_active.size());
  return d;
}

inline UnicyclicDecomposition decompose(const Graph& graph) { return decompose(graph, validate_unicyclic(graph)); }

/// Threads whose anchor is the cycle vertex v_i.
inline const std::vector<Thread>& threads_at_cycle_vertex(const UnicyclicDecomposition& d, int i) {
  return d.threads[d.cycle_vertex(i)];
}

}  // namespace unimd
