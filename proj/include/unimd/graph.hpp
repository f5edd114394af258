#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unimd {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool incident(Vertex x) const { return u == x || v == x; }

  auto operator<=>(const Edge&) const = default;
};

enum class GraphErrorKind {
  Malformed,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  VertexGap,
  Empty,
  TreeInput,
  MultiCycle,
  UnknownVertex,
};

inline const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::Malformed: return "malformed";
    case GraphErrorKind::SelfLoop: return "self-loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate edge";
    case GraphErrorKind::Disconnected: return "disconnected";
    case GraphErrorKind::VertexGap: return "vertex id gap";
    case GraphErrorKind::Empty: return "empty graph";
    case GraphErrorKind::TreeInput: return "not unicyclic: tree";
    case GraphErrorKind::MultiCycle: return "not unicyclic: more than one cycle";
    case GraphErrorKind::UnknownVertex: return "unknown vertex";
  }
  return "unknown";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& detail)
      : std::runtime_error(detail.empty() ? std::string(to_string(kind))
                                          : std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/**
 * Simple connected undirected graph on vertices 0..n-1.
 *
 * Construction validates the edge list; an instance is always simple and
 * connected, and the adjacency lists are sorted.
 */
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw GraphError(GraphErrorKind::Empty, "");
    adjacency_.assign(n_, {});
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v >= n_)
        throw GraphError(GraphErrorKind::UnknownVertex, std::to_string(e.u) + " " + std::to_string(e.v));
      if (e.u == e.v) throw GraphError(GraphErrorKind::SelfLoop, std::to_string(e.u));
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
      throw GraphError(GraphErrorKind::DuplicateEdge, std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    for (Vertex x = 0; x < n_; ++x)
      if (n_ > 1 && adjacency_[x].empty()) throw GraphError(GraphErrorKind::VertexGap, std::to_string(x));
    if (!connected()) throw GraphError(GraphErrorKind::Disconnected, "");
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex x) const { return adjacency_[x]; }
  int degree(Vertex x) const { return static_cast<int>(adjacency_[x].size()); }

  bool has_edge(Vertex a, Vertex b) const {
    const auto& nb = adjacency_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Index of edge {a,b} in edges(), or -1.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency_[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n_;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Parses "u v" lines; '#' comments and blank lines are skipped.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = -1, b = -1;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000)
      throw GraphError(GraphErrorKind::Malformed, "line " + std::to_string(lineno) + ": '" + line + "'");
    if (a == b) throw GraphError(GraphErrorKind::SelfLoop, "line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_id = std::max<int>(max_id, static_cast<int>(std::max(a, b)));
  }
  if (edges.empty()) throw GraphError(GraphErrorKind::Empty, "no edges");
  return Graph(max_id + 1, std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Dense all-pairs hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, -1) {}

  int order() const { return n_; }
  int operator()(Vertex a, Vertex b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
  int& at(Vertex a, Vertex b) { return dist_[static_cast<std::size_t>(a) * n_ + b]; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

/// BFS from every vertex.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex src = 0; src < n; ++src) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = src;
    dm.at(src, src) = 0;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : g.neighbors(x))
        if (dm(src, y) < 0) {
          dm.at(src, y) = dm(src, x) + 1;
          queue[tail++] = y;
        }
    }
  }
  return dm;
}

/// d(e, s) = min{d(u,s), d(v,s)}.
inline int vertex_edge_distance(const DistanceMatrix& dm, const Edge& e, Vertex s) {
  return std::min(dm(e.u, s), dm(e.v, s));
}

struct CycleInfo {
  std::vector<Vertex> cycle;  // v_0 .. v_{g-1}
  std::vector<char> on_cycle;
  std::vector<int> position;  // cycle index per vertex, -1 off the cycle

  int length() const { return static_cast<int>(cycle.size()); }
  Vertex at(int i) const {
    const int g = length();
    return cycle[((i % g) + g) % g];
  }
  /// Hop distance between cycle indices along the cycle.
  int cycle_distance(int i, int j) const {
    const int g = length();
    int d = ((i - j) % g + g) % g;
    return std::min(d, g - d);
  }
};

/**
 * Returns the unique cycle of a connected unicyclic graph.
 *
 * Degree-1 vertices are pruned iteratively; the survivors are the cycle,
 * ordered by walking from the smallest survivor towards its smaller
 * surviving neighbour.
 */
inline CycleInfo validate_unicyclic(const Graph& g) {
  const int n = g.order();
  if (g.size() < n) throw GraphError(GraphErrorKind::TreeInput, "");
  if (g.size() > n) throw GraphError(GraphErrorKind::MultiCycle, "");

  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> leaves;
  for (Vertex x = 0; x < n; ++x) {
    deg[x] = g.degree(x);
    if (deg[x] == 1) leaves.push_back(x);
  }
  while (!leaves.empty()) {
    Vertex x = leaves.back();
    leaves.pop_back();
    removed[x] = 1;
    for (Vertex y : g.neighbors(x))
      if (!removed[y] && --deg[y] == 1) leaves.push_back(y);
  }

  CycleInfo info;
  info.on_cycle.assign(n, 0);
  info.position.assign(n, -1);
  Vertex start = -1;
  for (Vertex x = 0; x < n; ++x)
    if (!removed[x]) {
      info.on_cycle[x] = 1;
      if (start < 0) start = x;
    }
  // m == n and connected: exactly one cycle survives pruning.
  Vertex prev = -1, cur = start;
  do {
    info.position[cur] = static_cast<int>(info.cycle.size());
    info.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex y : g.neighbors(cur))
      if (info.on_cycle[y] && y != prev) {
        next = y;
        break;
      }
    prev = cur;
    cur = next;
  } while (cur != start);
  return info;
}

}  // namespace unimd
