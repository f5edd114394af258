#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unimd/landmarks.hpp"

namespace unimd {

template <typename Item>
struct GeneratorCheck {
  bool ok = true;
  std::optional<std::pair<Item, Item>> failing_pair;  // lexicographically smallest

  explicit operator bool() const { return ok; }
};

/// Calls visit(combination) for every size-m subset of {0..n-1} in lexicographic order until it returns true.
template <typename Visit>
bool for_each_combination(int n, int m, Visit&& visit) {
  if (m < 0 || m > n) return false;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (visit(static_cast<const std::vector<int>&>(idx))) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace detail {

// Generic pairwise scan: item x has coordinate coord(x, s) for each landmark s.
template <typename Coord>
std::optional<std::pair<int, int>> first_collision(int items, const VertexSet& s, Coord&& coord) {
  for (int x = 0; x < items; ++x)
    for (int y = x + 1; y < items; ++y) {
      bool same = true;
      for (Vertex v : s)
        if (coord(x, v) != coord(y, v)) {
          same = false;
          break;
        }
      if (same) return std::pair{x, y};
    }
  return std::nullopt;
}

}  // namespace detail

/// Every vertex pair has distinct distance vectors to S.
inline GeneratorCheck<Vertex> is_vertex_generator(const DistanceMatrix& dm, const VertexSet& s) {
  auto hit = detail::first_collision(dm.order(), s, [&](int x, Vertex v) { return dm(x, v); });
  if (!hit) return {};
  return {false, *hit};
}

/// Every edge pair has distinct edge-to-vertex distance vectors to S.
inline GeneratorCheck<Edge> is_edge_generator(const DistanceMatrix& dm, const std::vector<Edge>& edges,
                                              const VertexSet& s) {
  auto hit = detail::first_collision(static_cast<int>(edges.size()), s,
                                     [&](int e, Vertex v) { return vertex_edge_distance(dm, edges[e], v); });
  if (!hit) return {};
  return {false, std::pair{edges[hit->first], edges[hit->second]}};
}

inline bool same_vertex_vector(const DistanceMatrix& dm, const VertexSet& s, Vertex x, Vertex y) {
  for (Vertex v : s)
    if (dm(x, v) != dm(y, v)) return false;
  return true;
}

inline bool same_edge_vector(const DistanceMatrix& dm, const VertexSet& s, const Edge& e, const Edge& f) {
  for (Vertex v : s)
    if (vertex_edge_distance(dm, e, v) != vertex_edge_distance(dm, f, v)) return false;
  return true;
}

enum class Metric { Vertex, Edge };

inline const char* to_string(Metric m) { return m == Metric::Vertex ? "vertex" : "edge"; }

struct OracleReport {
  int value = 0;
  VertexSet witness_generator;
  std::uint64_t checked_subsets = 0;
};

struct OracleOptions {
  int size_cap = 16;
  /// Skip sizes below L + max{0, 2-b} and, at that size, test only biactive branch-resolving sets.
  bool prune = false;
};

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline OracleReport brute_force(const Graph& g, Metric metric, const OracleOptions& opt) {
  const int n = g.order();
  if (n > opt.size_cap)
    throw SizeCapExceeded("graph order " + std::to_string(n) + " exceeds oracle cap " + std::to_string(opt.size_cap));
  const DistanceMatrix dm = all_pairs_distances(g);
  std::optional<UnicyclicDecomposition> d;
  int min_size = 1;
  if (opt.prune) {
    d = decompose(g);
    min_size = d->L + std::max(0, 2 - d->b);
  }
  OracleReport report;
  VertexSet s;
  for (int m = min_size; m <= n; ++m) {
    bool filtered = opt.prune && m == min_size;
    bool found = for_each_combination(n, m, [&](const std::vector<int>& combo) {
      s.assign(combo.begin(), combo.end());
      if (filtered && !(is_biactive(*d, s) && is_branch_resolving(*d, s))) return false;
      ++report.checked_subsets;
      bool ok = metric == Metric::Vertex ? is_vertex_generator(dm, s).ok : is_edge_generator(dm, g.edges(), s).ok;
      if (ok) report.witness_generator = s;
      return ok;
    });
    if (found) {
      report.value = m;
      return report;
    }
  }
  // S = V(G) always resolves vertices; unreachable for vertex metric on any simple graph.
  throw std::logic_error("no generator found");
}

}  // namespace detail

inline OracleReport brute_force_dim(const Graph& g, const OracleOptions& opt = {}) {
  return detail::brute_force(g, Metric::Vertex, opt);
}

inline OracleReport brute_force_edim(const Graph& g, const OracleOptions& opt = {}) {
  return detail::brute_force(g, Metric::Edge, opt);
}

}  // namespace unimd
