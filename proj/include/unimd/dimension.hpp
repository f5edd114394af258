#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unimd/configurations.hpp"
#include "unimd/oracle.hpp"

namespace unimd {

enum class PlacementMode { AtCycleVertex, OnThread };

struct Placement {
  int position = 0;  // cycle index
  PlacementMode mode = PlacementMode::AtCycleVertex;
  int thread = -1;   // index into threads of v_position when OnThread
};

/**
 * How a smallest biactive branch-resolving set is assembled: which thread is
 * left uncovered at every multi-thread vertex, and where the extra
 * activating landmarks go when b < 2.
 */
struct ActivationPlan {
  std::vector<int> activated;          // extra cycle positions, ascending
  std::vector<Placement> placement;    // one per extra position
  std::vector<std::pair<Vertex, int>> free_choice;  // (anchor, index of the thread left free)
};

struct PlannedSet {
  ActivationPlan plan;
  VertexSet landmarks;
};

namespace detail {

// Thread indices at v ordered longest first, ties by position in d.threads[v].
inline std::vector<int> free_preference(const UnicyclicDecomposition& d, Vertex v) {
  std::vector<int> order(d.threads[v].size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.threads[v][a].length() > d.threads[v][b].length(); });
  return order;
}

}  // namespace detail

/**
 * One concrete set per configuration-relevant profile. Covered threads carry
 * their landmark at the tip. Profiles vary in the free thread at each
 * multi-thread cycle vertex and, for b < 2, in the extra positions and their
 * placement; extra positions are never inside a branch-active tree.
 */
inline std::vector<PlannedSet> enumerate_smallest_biactive_sets(const UnicyclicDecomposition& d) {
  const int n = d.order();
  const int g = d.g();

  // Anchors with >= 2 threads. Cycle anchors branch over free choices; others use the preferred one.
  std::vector<Vertex> cycle_anchors;
  VertexSet fixed;
  std::vector<std::pair<Vertex, int>> fixed_choice;
  for (Vertex v = 0; v < n; ++v) {
    if (d.threads[v].size() < 2) continue;
    if (d.cycle_info.on_cycle[v]) {
      cycle_anchors.push_back(v);
      continue;
    }
    const int keep = detail::free_preference(d, v).front();
    fixed_choice.emplace_back(v, keep);
    for (int t = 0; t < static_cast<int>(d.threads[v].size()); ++t)
      if (t != keep) fixed.push_back(d.threads[v][t].tip());
  }

  // Cartesian product of free choices at cycle anchors, longest-free first.
  std::vector<std::vector<std::pair<Vertex, int>>> profiles{{}};
  for (Vertex v : cycle_anchors) {
    std::vector<std::vector<std::pair<Vertex, int>>> next;
    for (const auto& partial : profiles)
      for (int t : detail::free_preference(d, v)) {
        auto p = partial;
        p.emplace_back(v, t);
        next.push_back(std::move(p));
      }
    profiles = std::move(next);
  }

  // Extra activation positions.
  std::vector<std::vector<int>> extra_sets;
  std::vector<int> candidates;
  for (int i = 0; i < g; ++i)
    if (!d.is_branch_active(i)) candidates.push_back(i);
  const int extra = std::max(0, 2 - d.b);
  for_each_combination(static_cast<int>(candidates.size()), extra, [&](const std::vector<int>& combo) {
    std::vector<int> pos;
    for (int c : combo) pos.push_back(candidates[c]);
    extra_sets.push_back(std::move(pos));
    return false;
  });

  std::vector<PlannedSet> out;
  for (const auto& positions : extra_sets) {
    // Placement choices per position: at the cycle vertex, or on each anchored thread.
    std::vector<std::vector<Placement>> placements{{}};
    for (int pos : positions) {
      std::vector<std::vector<Placement>> next;
      const int threads_here = static_cast<int>(threads_at_cycle_vertex(d, pos).size());
      for (const auto& partial : placements) {
        auto p = partial;
        p.push_back({pos, PlacementMode::AtCycleVertex, -1});
        next.push_back(std::move(p));
        for (int t = 0; t < threads_here; ++t) {
          auto q = partial;
          q.push_back({pos, PlacementMode::OnThread, t});
          next.push_back(std::move(q));
        }
      }
      placements = std::move(next);
    }
    for (const auto& placement : placements)
      for (const auto& profile : profiles) {
        PlannedSet ps;
        ps.plan.activated = positions;
        ps.plan.placement = placement;
        ps.plan.free_choice = fixed_choice;
        ps.plan.free_choice.insert(ps.plan.free_choice.end(), profile.begin(), profile.end());
        VertexSet s = fixed;
        for (const auto& [v, keep] : profile)
          for (int t = 0; t < static_cast<int>(d.threads[v].size()); ++t)
            if (t != keep) s.push_back(d.threads[v][t].tip());
        for (const Placement& pl : placement)
          s.push_back(pl.mode == PlacementMode::AtCycleVertex ? d.cycle_vertex(pl.position)
                                                               : threads_at_cycle_vertex(d, pl.position)[pl.thread].tip());
        ps.landmarks = normalized(std::move(s));
        out.push_back(std::move(ps));
      }
  }
  return out;
}

enum class Status { Positive, Negative };

inline const char* to_string(Status s) { return s == Status::Positive ? "positive" : "negative"; }

struct StatusResult {
  Status status = Status::Positive;
  std::optional<VertexSet> negative_witness;  // first enumerated set avoiding the configurations
  VertexSet base_set;                         // witness if negative, else the first enumerated set
  ConfigurationReport base_report;
};

namespace detail {

inline StatusResult status_for(const UnicyclicDecomposition& d, Metric metric) {
  StatusResult result;
  bool first = true;
  for (const PlannedSet& ps : enumerate_smallest_biactive_sets(d)) {
    const LandmarkContext ctx = build_context(d, ps.landmarks);
    ConfigurationReport report = analyze_configurations(ctx);
    if (first) {
      result.base_set = ps.landmarks;
      result.base_report = report;
      first = false;
    }
    const bool blocked = metric == Metric::Vertex ? report.blocks_vertex() : report.blocks_edge();
    if (!blocked) {
      result.status = Status::Negative;
      result.negative_witness = ps.landmarks;
      result.base_set = ps.landmarks;
      result.base_report = std::move(report);
      return result;
    }
  }
  return result;
}

}  // namespace detail

/// Negative iff some smallest biactive branch-resolving set avoids A, B and C.
inline StatusResult abc_status(const UnicyclicDecomposition& d) { return detail::status_for(d, Metric::Vertex); }

/// Negative iff some smallest biactive branch-resolving set avoids A, D and E.
inline StatusResult ade_status(const UnicyclicDecomposition& d) { return detail::status_for(d, Metric::Edge); }

/// Smallest canonical index forming a geodesic triple with two active positions.
inline int geodesic_completion(const LandmarkContext& ctx) {
  const int g = ctx.g;
  auto cd = [g](int i, int j) {
    int x = ((i - j) % g + g) % g;
    return std::min(x, g - x);
  };
  for (int c = 0; c < g; ++c) {
    if (std::binary_search(ctx.canonical_active.begin(), ctx.canonical_active.end(), c)) continue;
    for (std::size_t a = 0; a < ctx.canonical_active.size(); ++a)
      for (std::size_t b = a + 1; b < ctx.canonical_active.size(); ++b) {
        const int p = ctx.canonical_active[a], q = ctx.canonical_active[b];
        if (cd(p, q) + cd(q, c) + cd(p, c) == g) return c;
      }
  }
  throw std::logic_error("no geodesic completion");
}

struct DimensionValue {
  int value = 0;
  int delta = 0;
  StatusResult status;
  VertexSet generator;
};

namespace detail {

inline DimensionValue dimension_for(const UnicyclicDecomposition& d, Metric metric) {
  DimensionValue out;
  out.status = status_for(d, metric);
  out.delta = out.status.status == Status::Positive ? 1 : 0;
  out.value = d.L + std::max(0, 2 - d.b) + out.delta;
  out.generator = out.status.base_set;
  if (out.delta == 1) {
    const LandmarkContext ctx = build_context(d, out.status.base_set);
    out.generator.push_back(ctx.vertex_at(geodesic_completion(ctx)));
    out.generator = normalized(std::move(out.generator));
  }
  const bool ok = metric == Metric::Vertex ? is_vertex_generator(d.distances, out.generator).ok
                                           : is_edge_generator(d.distances, d.graph.edges(), out.generator).ok;
  if (!ok || static_cast<int>(out.generator.size()) != out.value)
    throw std::logic_error(std::string("structural ") + to_string(metric) + " generator failed verification");
  return out;
}

}  // namespace detail

/// dim(G) = L + max{0, 2-b} + delta, with an oracle-verified generator of that size.
inline DimensionValue vertex_dimension(const UnicyclicDecomposition& d) {
  return detail::dimension_for(d, Metric::Vertex);
}

/// edim(G) = L + max{0, 2-b} + delta_e, with an oracle-verified generator of that size.
inline DimensionValue edge_dimension(const UnicyclicDecomposition& d) { return detail::dimension_for(d, Metric::Edge); }

struct DimensionResult {
  int L = 0, b = 0, g = 0;
  DimensionValue dim;
  DimensionValue edim;
  int difference = 0;
};

/// 1 for ABC-positive/ADE-negative, -1 for the reverse, 0 otherwise.
inline int difference_class(Status abc, Status ade) {
  if (abc == Status::Positive && ade == Status::Negative) return 1;
  if (abc == Status::Negative && ade == Status::Positive) return -1;
  return 0;
}

inline int difference_class(const UnicyclicDecomposition& d) {
  return difference_class(abc_status(d).status, ade_status(d).status);
}

inline DimensionResult analyze(const UnicyclicDecomposition& d) {
  DimensionResult r;
  r.L = d.L;
  r.b = d.b;
  r.g = d.g();
  r.dim = vertex_dimension(d);
  r.edim = edge_dimension(d);
  r.difference = difference_class(r.dim.status.status, r.edim.status.status);
  return r;
}

}  // namespace unimd
