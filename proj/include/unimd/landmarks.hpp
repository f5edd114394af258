#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "unimd/decomposition.hpp"

namespace unimd {

/// Relabelling of the cycle: canonical index c sits at original index start + direction * c (mod g).
struct CycleLabelling {
  int start = 0;
  int direction = 1;

  int to_original(int c, int g) const { return (((start + direction * c) % g) + g) % g; }
  int to_canonical(int i, int g) const { return (((i - start) * direction % g) + g) % g; }

  auto operator<=>(const CycleLabelling&) const = default;
};

/// Landmark set S together with everything the configurations are defined on.
struct LandmarkContext {
  VertexSet landmarks;
  int g = 0;
  std::vector<int> active;            // original cycle indices, ascending
  std::vector<int> canonical_active;  // canonical indices, ascending; front() == 0
  int a_S = 0;
  CycleLabelling labelling;
  int k = 0;
  std::vector<Vertex> canonical_cycle;                // cycle vertex at each canonical index
  std::vector<std::vector<Thread>> free_threads;      // per canonical index

  bool biactive() const { return a_S >= 2; }
  Vertex vertex_at(int c) const { return canonical_cycle[((c % g) + g) % g]; }
  const std::vector<Thread>& free_at(int c) const { return free_threads[((c % g) + g) % g]; }
};

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline std::vector<int> active_positions(const UnicyclicDecomposition& d, const VertexSet& s) {
  std::vector<int> active;
  for (Vertex x : s) active.push_back(d.tree_of[x]);
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  return active;
}

inline bool is_free(const Thread& t, const VertexSet& s) {
  return std::none_of(t.vertices.begin(), t.vertices.end(),
                      [&](Vertex x) { return std::binary_search(s.begin(), s.end(), x); });
}

/// Largest canonical index of an active position under a labelling.
inline int max_active_index(const std::vector<int>& active, int g, const CycleLabelling& lab) {
  int k = 0;
  for (int a : active) k = std::max(k, lab.to_canonical(a, g));
  return k;
}

/**
 * All labellings with an active v_0 that minimise k, in lexicographic order
 * (start ascending, direction +1 before -1).
 */
inline std::vector<CycleLabelling> minimal_labellings(const std::vector<int>& active, int g) {
  std::vector<CycleLabelling> best;
  int best_k = g;
  for (int s : active)
    for (int dir : {1, -1}) {
      CycleLabelling lab{s, dir};
      int k = max_active_index(active, g, lab);
      if (k < best_k) {
        best_k = k;
        best.clear();
      }
      if (k == best_k) best.push_back(lab);
    }
  return best;
}

inline LandmarkContext build_context(const UnicyclicDecomposition& d, VertexSet s, const CycleLabelling& lab) {
  LandmarkContext ctx;
  ctx.landmarks = normalized(std::move(s));
  ctx.g = d.g();
  ctx.active = active_positions(d, ctx.landmarks);
  ctx.a_S = static_cast<int>(ctx.active.size());
  ctx.labelling = lab;
  ctx.k = max_active_index(ctx.active, ctx.g, lab);
  for (int a : ctx.active) ctx.canonical_active.push_back(lab.to_canonical(a, ctx.g));
  std::sort(ctx.canonical_active.begin(), ctx.canonical_active.end());
  ctx.canonical_cycle.resize(ctx.g);
  ctx.free_threads.assign(ctx.g, {});
  for (int c = 0; c < ctx.g; ++c) {
    ctx.canonical_cycle[c] = d.cycle_vertex(lab.to_original(c, ctx.g));
    for (const Thread& t : d.threads[ctx.canonical_cycle[c]])
      if (is_free(t, ctx.landmarks)) ctx.free_threads[c].push_back(t);
  }
  return ctx;
}

/// Context under the canonical labelling, ties broken by smallest start then direction +1.
inline LandmarkContext build_context(const UnicyclicDecomposition& d, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("empty landmark set");
  for (Vertex x : s)
    if (x < 0 || x >= d.order()) throw GraphError(GraphErrorKind::UnknownVertex, std::to_string(x));
  s = normalized(std::move(s));
  auto labs = minimal_labellings(active_positions(d, s), d.g());
  return build_context(d, std::move(s), labs.front());
}

/// At every vertex of degree >= 3, at most one anchored thread is free of landmarks.
inline bool is_branch_resolving(const UnicyclicDecomposition& d, const VertexSet& s) {
  const VertexSet sorted = normalized(s);
  for (Vertex x = 0; x < d.order(); ++x) {
    int free_count = 0;
    for (const Thread& t : d.threads[x]) free_count += is_free(t, sorted) ? 1 : 0;
    if (free_count > 1) return false;
  }
  return true;
}

inline bool is_biactive(const UnicyclicDecomposition& d, const VertexSet& s) {
  return active_positions(d, s).size() >= 2;
}

/// Some three active positions whose pairwise cycle distances sum to g.
inline bool has_geodesic_triple(const std::vector<int>& active, int g) {
  auto cd = [g](int i, int j) {
    int x = ((i - j) % g + g) % g;
    return std::min(x, g - x);
  };
  const std::size_t m = active.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        if (cd(active[a], active[b]) + cd(active[b], active[c]) + cd(active[a], active[c]) == g) return true;
  return false;
}

}  // namespace unimd
